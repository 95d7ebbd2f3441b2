"""Assemble kernel-checkable proofs from derivations under hypotheses.

A :class:`Derivation` records steps that may depend on hypotheses.
:meth:`Derivation.discharge` applies the deduction theorem, turning a
derivation of ``C`` from ``A`` into one of ``A -> C``.  The lemma functions
below produce the classical propositional facts the bundled corpus needs;
:meth:`Derivation.to_proof` flattens a hypothesis-free derivation into a
:class:`~peano_workbench.kernel.Proof`.

None of this is trusted: every emitted proof goes through ``check_proof``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kernel import (
    Axiom, AxiomId, Generalisation, Hypothesis, ModusPonens, Proof, ProofLine,
    matches_schema, pa_instance,
)
from .syntax import Add, Eq, Formula, ForAll, Implies, Not, Term, Var, Zero, free_variables


class DerivationError(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    formula: Formula
    rule: str                  # AX | HYP | MP | GEN
    axiom: AxiomId | None = None
    premises: tuple = ()       # MP: (implication, antecedent); GEN: (premise,)
    var: Var | None = None


class Derivation:
    def __init__(self, hyps=()):
        self.hyps = list(hyps)
        self.steps: list = []

    def __len__(self):
        return len(self.steps)

    @property
    def last(self) -> Formula:
        return self.steps[-1].formula

    def _push(self, step: Step) -> int:
        self.steps.append(step)
        return len(self.steps) - 1

    def axiom(self, f: Formula, axiom) -> int:
        axiom = AxiomId(axiom)
        if matches_schema(f, axiom) is None:
            raise DerivationError(f"not an instance of {axiom}: {f!r}")
        return self._push(Step(f, "AX", axiom))

    def hyp(self, f: Formula) -> int:
        if f not in self.hyps:
            raise DerivationError(f"undeclared hypothesis {f!r}")
        return self._push(Step(f, "HYP"))

    def mp(self, imp: int, ant: int) -> int:
        fi, fa = self.steps[imp].formula, self.steps[ant].formula
        if not (isinstance(fi, Implies) and fi.antecedent == fa):
            raise DerivationError("modus ponens shape mismatch")
        return self._push(Step(fi.consequent, "MP", premises=(imp, ant)))

    def gen(self, i: int, x: Var) -> int:
        return self._push(Step(ForAll(x, self.steps[i].formula), "GEN", premises=(i,), var=x))

    def include(self, other: "Derivation") -> int:
        """Inline ``other`` (whose hypotheses must be among ours); return its last step."""
        missing = [h for h in other.hyps if h not in self.hyps]
        if missing:
            raise DerivationError(f"included derivation needs hypotheses {missing!r}")
        offset = len(self.steps)
        for s in other.steps:
            self.steps.append(Step(s.formula, s.rule, s.axiom,
                                   tuple(p + offset for p in s.premises), s.var))
        return len(self.steps) - 1

    def discharge(self, a: Formula) -> "Derivation":
        """Deduction theorem: from ``hyps + [a] |- C`` build ``hyps |- a -> C`` for every step."""
        rest = [h for h in self.hyps if h != a]
        out = Derivation(rest)
        plain: dict = {}    # step -> index in out, for steps not depending on ``a``
        image: dict = {}    # step -> index in out of ``a -> C``

        def lifted(k: int) -> int:
            if k not in image:
                c = self.steps[k].formula
                l1 = out.axiom(Implies(c, Implies(a, c)), AxiomId.L1)
                image[k] = out.mp(l1, plain[k])
            return image[k]

        for k, s in enumerate(self.steps):
            c = s.formula
            if s.rule == "HYP" and c == a:
                image[k] = out.include(identity(a))
            elif all(p in plain for p in s.premises):
                plain[k] = out._push(Step(c, s.rule, s.axiom,
                                          tuple(plain[p] for p in s.premises), s.var))
            elif s.rule == "MP":
                imp, ant = s.premises
                d = self.steps[ant].formula
                l2 = out.axiom(
                    Implies(Implies(a, Implies(d, c)), Implies(Implies(a, d), Implies(a, c))),
                    AxiomId.L2)
                m = out.mp(l2, lifted(imp))
                image[k] = out.mp(m, lifted(ant))
            else:
                x = s.var
                if x in free_variables(a):
                    raise DerivationError(f"cannot discharge {a!r}: generalised over {x.name}")
                d = self.steps[s.premises[0]].formula
                g = out.gen(lifted(s.premises[0]), x)
                l5 = out.axiom(Implies(ForAll(x, Implies(a, d)), Implies(a, ForAll(x, d))), AxiomId.L5)
                image[k] = out.mp(l5, g)
        lifted(len(self.steps) - 1)
        if out.steps[-1].formula != Implies(a, self.last):
            out._push(out.steps[image[len(self.steps) - 1]])
        return out

    def to_proof(self) -> Proof:
        """Flatten into numbered proof lines, reusing an earlier line for a repeated formula."""
        emitted: dict = {}
        lines = []
        where: list = []
        for s in self.steps:
            if s.formula in emitted:
                where.append(emitted[s.formula])
                continue
            idx = len(lines) + 1
            if s.rule == "AX":
                just = Axiom(s.axiom)
            elif s.rule == "HYP":
                just = Hypothesis()
            elif s.rule == "MP":
                just = ModusPonens(where[s.premises[0]], where[s.premises[1]])
            else:
                just = Generalisation(where[s.premises[0]], s.var)
            lines.append(ProofLine(idx, s.formula, just))
            emitted[s.formula] = idx
            where.append(idx)
        if self.steps and lines[-1].formula != self.last:
            # goal was proved earlier; repeat it last so the proof ends on it
            k = emitted[self.last]
            src = lines[k - 1]
            lines.append(ProofLine(len(lines) + 1, src.formula, src.justification))
        return Proof(tuple(lines), self.last)


# propositional lemmas; each returns a hypothesis-free derivation


def identity(a: Formula) -> Derivation:
    """``A -> A``."""
    d = Derivation()
    aa = Implies(a, a)
    s1 = d.axiom(Implies(a, Implies(aa, a)), AxiomId.L1)
    s2 = d.axiom(Implies(Implies(a, Implies(aa, a)), Implies(Implies(a, aa), aa)), AxiomId.L2)
    s3 = d.mp(s2, s1)
    s4 = d.axiom(Implies(a, aa), AxiomId.L1)
    d.mp(s3, s4)
    return d


def double_negation_elim(b: Formula) -> Derivation:
    """``~~B -> B``."""
    nb, nnb = Not(b), Not(Not(b))
    d = Derivation([nnb])
    h = d.hyp(nnb)
    l3 = d.axiom(Implies(Implies(nb, nnb), Implies(Implies(nb, nb), b)), AxiomId.L3)
    l1 = d.axiom(Implies(nnb, Implies(nb, nnb)), AxiomId.L1)
    s1 = d.mp(l1, h)
    s2 = d.mp(l3, s1)
    s3 = d.include(identity(nb))
    d.mp(s2, s3)
    return d.discharge(nnb)


def double_negation_intro(b: Formula) -> Derivation:
    """``B -> ~~B``."""
    nnnb, nnb = Not(Not(Not(b))), Not(Not(b))
    d = Derivation([b])
    e = d.include(double_negation_elim(Not(b)))
    l3 = d.axiom(Implies(Implies(nnnb, Not(b)), Implies(Implies(nnnb, b), nnb)), AxiomId.L3)
    s1 = d.mp(l3, e)
    h = d.hyp(b)
    l1 = d.axiom(Implies(b, Implies(nnnb, b)), AxiomId.L1)
    s2 = d.mp(l1, h)
    d.mp(s1, s2)
    return d.discharge(b)


def explosion(a: Formula, b: Formula) -> Derivation:
    """``A -> (~A -> B)``."""
    na, nb = Not(a), Not(b)
    d = Derivation([a, na])
    ha, hna = d.hyp(a), d.hyp(na)
    s1 = d.mp(d.axiom(Implies(a, Implies(nb, a)), AxiomId.L1), ha)
    s2 = d.mp(d.axiom(Implies(na, Implies(nb, na)), AxiomId.L1), hna)
    l3 = d.axiom(Implies(Implies(nb, na), Implies(Implies(nb, a), b)), AxiomId.L3)
    d.mp(d.mp(l3, s2), s1)
    return d.discharge(na).discharge(a)


def contraposition_converse(a: Formula, b: Formula) -> Derivation:
    """``(~B -> ~A) -> (A -> B)``."""
    na, nb = Not(a), Not(b)
    h1f = Implies(nb, na)
    d = Derivation([h1f, a])
    h1, ha = d.hyp(h1f), d.hyp(a)
    l3 = d.axiom(Implies(h1f, Implies(Implies(nb, a), b)), AxiomId.L3)
    s1 = d.mp(l3, h1)
    s2 = d.mp(d.axiom(Implies(a, Implies(nb, a)), AxiomId.L1), ha)
    d.mp(s1, s2)
    return d.discharge(a).discharge(h1f)


def contraposition(a: Formula, b: Formula) -> Derivation:
    """``(A -> B) -> (~B -> ~A)``."""
    ab = Implies(a, b)
    nna, nnb = Not(Not(a)), Not(Not(b))
    inner = Derivation([ab, nna])
    h = inner.hyp(nna)
    s1 = inner.mp(inner.include(double_negation_elim(a)), h)
    s2 = inner.mp(inner.hyp(ab), s1)
    inner.mp(inner.include(double_negation_intro(b)), s2)
    d = inner.discharge(nna)              # ab |- ~~A -> ~~B
    k = len(d) - 1
    c = d.include(contraposition_converse(Not(b), Not(a)))
    d.mp(c, k)
    return d.discharge(ab)


def negated_contraposition(a: Formula, b: Formula) -> Derivation:
    """``(A -> ~B) -> (B -> ~A)``."""
    anb = Implies(a, Not(b))
    d = Derivation([anb, b])
    c = d.include(contraposition(a, Not(b)))     # (A -> ~B) -> (~~B -> ~A)
    s1 = d.mp(c, d.hyp(anb))
    s2 = d.mp(d.include(double_negation_intro(b)), d.hyp(b))
    d.mp(s1, s2)
    return d.discharge(b).discharge(anb)


def reflexivity(t: Term) -> Derivation:
    """``t = t`` from PA5 and PA1 (no reflexivity axiom needed)."""
    d = Derivation()
    t0 = Add(t, Zero())
    p5 = d.axiom(Eq(t0, t), AxiomId.PA5)
    p1 = d.axiom(pa_instance(AxiomId.PA1, t0, t, t), AxiomId.PA1)
    d.mp(d.mp(p1, p5), p5)
    return d


def chain(d: Derivation, lemma: Derivation, *args: int) -> int:
    """Inline ``lemma`` and apply modus ponens with the given steps in order."""
    k = d.include(lemma)
    for a in args:
        k = d.mp(k, a)
    return k
