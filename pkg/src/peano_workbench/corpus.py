"""Bundled proof corpora.

* ``clean``: the induction proof that every number is zero or a successor,
  plus two short generalisations.  No consistency-scan witnesses.
* ``contradictory``: a hypothesis ``(Ax1)(x1 = 0)`` next to a PA proof of its
  negation, i.e. a simple-inconsistency pair for PA + that hypothesis.
* ``omega``: ``(Ex1)(x1 = 11)`` together with ``~(n = 11)`` for n = 0..10,
  the bounded omega-inconsistency pattern at coverage 10.  Every proof in it
  is a genuine PA proof; the pattern stops at 10 because ``~(11 = 11)`` is
  not provable.

The files under ``data/`` are generated by :func:`write_corpora`; tests
regenerate them and compare byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from . import builder as b
from .kernel import AxiomId, Proof, format_proof, induction_instance, pa_instance
from .syntax import Eq, Formula, ForAll, Implies, Not, Succ, Var, Zero, disj, exists, numeral

X = Var(1)
Y = Var.named("y1")
DATA_DIR = Path(__file__).parent / "data"


def zero_or_successor(x: Var = X) -> Formula:
    """``x = 0 | (Ey1)(x = y1')``."""
    return disj(Eq(x, Zero()), exists(Y, Eq(x, Succ(Y))))


def zero_or_successor_proof() -> Proof:
    """PA proof of ``(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))`` by induction on x1."""
    g = zero_or_successor()
    g0 = zero_or_successor(Zero())
    gs = zero_or_successor(Succ(X))
    d = b.Derivation()

    # base: 0 = 0 refutes the antecedent ~(0 = 0)
    refl0 = d.include(b.reflexivity(Zero()))
    base = b.chain(d, b.explosion(Eq(Zero(), Zero()), g0.consequent), refl0)

    # step: (Ey1)(x1' = y1') holds outright, witnessed by y1 := x1
    sx = Succ(X)
    none = ForAll(Y, Not(Eq(sx, Succ(Y))))
    l4 = d.axiom(Implies(none, Not(Eq(sx, sx))), AxiomId.L4)
    refl = d.include(b.reflexivity(sx))
    witness = b.chain(d, b.negated_contraposition(none, Eq(sx, sx)), l4, refl)
    gsx = d.mp(d.axiom(Implies(Not(none), Implies(Not(Eq(sx, Zero())), Not(none))), AxiomId.L1), witness)
    step = d.mp(d.axiom(Implies(gs, Implies(g, gs)), AxiomId.L1), gsx)
    gen = d.gen(step, X)

    ind = d.axiom(induction_instance(g, X), AxiomId.PA9)
    d.mp(d.mp(ind, base), gen)
    return d.to_proof()


def generalised_axiom_proof(axiom: AxiomId) -> Proof:
    d = b.Derivation()
    k = d.axiom(pa_instance(axiom), axiom)
    d.gen(k, X)
    return d.to_proof()


def reflexivity_closure_proof() -> Proof:
    d = b.Derivation()
    k = d.include(b.reflexivity(X))
    d.gen(k, X)
    return d.to_proof()


def numeral_inequality(n: int, m: int) -> b.Derivation:
    """``~(n = m)`` for numerals ``n < m``, by PA3 then PA4 contraposed ``n`` times."""
    if not 0 <= n < m:
        raise ValueError("need 0 <= n < m")
    d = b.Derivation()
    k = d.axiom(pa_instance(AxiomId.PA3, numeral(m - n - 1)), AxiomId.PA3)
    for i in range(1, n + 1):
        lo, hi = numeral(i - 1), numeral(m - n + i - 1)
        p4 = d.axiom(pa_instance(AxiomId.PA4, lo, hi), AxiomId.PA4)
        k = b.chain(d, b.contraposition(Eq(Succ(lo), Succ(hi)), Eq(lo, hi)), p4, k)
    return d


def exists_numeral_proof(m: int) -> Proof:
    """``(Ex1)(x1 = m)`` via L4 and reflexivity."""
    t = numeral(m)
    none = ForAll(X, Not(Eq(X, t)))
    d = b.Derivation()
    l4 = d.axiom(Implies(none, Not(Eq(t, t))), AxiomId.L4)
    refl = d.include(b.reflexivity(t))
    b.chain(d, b.negated_contraposition(none, Eq(t, t)), l4, refl)
    return d.to_proof()


def not_everything_zero_proof() -> Proof:
    """``~(Ax1)(x1 = 0)``: instantiate at 0' and refute ``0' = 0`` with PA3 and PA1."""
    one = Succ(Zero())
    all_zero = ForAll(X, Eq(X, Zero()))
    d = b.Derivation()
    l4 = d.axiom(Implies(all_zero, Eq(one, Zero())), AxiomId.L4)

    sym = b.Derivation([Eq(one, Zero())])
    p1 = sym.axiom(pa_instance(AxiomId.PA1, one, Zero(), one), AxiomId.PA1)
    s = sym.mp(p1, sym.hyp(Eq(one, Zero())))
    sym.mp(s, sym.include(b.reflexivity(one)))
    sym = sym.discharge(Eq(one, Zero()))          # 0' = 0 -> 0 = 0'
    k_sym = d.include(sym)

    pa3 = d.axiom(pa_instance(AxiomId.PA3, Zero()), AxiomId.PA3)
    one_ne_zero = b.chain(d, b.contraposition(Eq(one, Zero()), Eq(Zero(), one)), k_sym, pa3)
    b.chain(d, b.contraposition(all_zero, Eq(one, Zero())), l4, one_ne_zero)
    return d.to_proof()


def hypothesis_proof(f: Formula) -> Proof:
    d = b.Derivation([f])
    d.hyp(f)
    return d.to_proof()


def clean_corpus() -> dict:
    return {
        "zero_or_successor.proof": zero_or_successor_proof(),
        "reflexivity.proof": reflexivity_closure_proof(),
        "zero_not_successor.proof": generalised_axiom_proof(AxiomId.PA3),
    }


def contradictory_corpus() -> dict:
    return {
        "all_zero_hypothesis.proof": hypothesis_proof(ForAll(X, Eq(X, Zero()))),
        "not_all_zero.proof": not_everything_zero_proof(),
    }


def omega_corpus(target: int = 11) -> dict:
    out = {f"exists_{target}.proof": exists_numeral_proof(target)}
    for n in range(target):
        out[f"ne_{n:02d}_{target}.proof"] = numeral_inequality(n, target).to_proof()
    return out


CORPORA = {
    "corpus": (clean_corpus, "Bundled PA corpus."),
    "crafted/contradictory": (contradictory_corpus, "Crafted: simple-inconsistency pair (uses a hypothesis)."),
    "crafted/omega": (omega_corpus, "Crafted: bounded omega-pattern, coverage 10."),
}


def render_corpus(name: str) -> dict:
    factory, header = CORPORA[name]
    return {fname: format_proof(p, header) for fname, p in factory().items()}


def write_corpora(root: Path = DATA_DIR):
    for name in CORPORA:
        target = root / name
        target.mkdir(parents=True, exist_ok=True)
        for fname, text in render_corpus(name).items():
            (target / fname).write_text(text, encoding="utf-8")


if __name__ == "__main__":
    write_corpora()
