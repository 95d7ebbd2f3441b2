"""Scan a corpus of checked proofs for inconsistency witness patterns.

Two patterns are reported, both about the theory S = PA + the hypotheses
the corpus uses:

* a simple-inconsistency pair: goals ``(Ax)F`` and ``~(Ax)F`` (up to
  renaming bound variables);
* a bounded omega pattern: a goal ``~(Ax)F`` together with goals ``F(n)``
  for every numeral ``n`` up to ``coverage``.  This is only a pattern up to
  ``coverage``; it says nothing about numerals beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .kernel import Proof, check_proof
from .notation import print_formula
from .syntax import ForAll, Not, alpha_key, numeral, substitute

DEFAULT_COVERAGE = 10


class UncheckedProofError(ValueError):
    pass


@dataclass(frozen=True)
class ScanReport:
    coverage: int
    goals: tuple                      # (name, formula text)
    hypotheses: tuple                 # formula texts, the extra axioms of S
    simple_pairs: tuple = ()          # (positive name, negative name, formula text)
    omega_patterns: tuple = ()        # (negative name, formula text, instance names)
    notes: tuple = field(default=())

    @property
    def witness_found(self) -> bool:
        return bool(self.simple_pairs or self.omega_patterns)

    def to_dict(self):
        return {
            "coverage": self.coverage,
            "goals": [{"name": n, "goal": g} for n, g in self.goals],
            "hypotheses": list(self.hypotheses),
            "simple_inconsistency": [
                {"positive": p, "negative": n, "formula": f} for p, n, f in self.simple_pairs],
            "omega_patterns": [
                {"negative": n, "formula": f, "pattern_up_to": self.coverage, "instances": list(i)}
                for n, f, i in self.omega_patterns],
            "witness_found": self.witness_found,
        }


def consistency_scan(corpus, coverage: int = DEFAULT_COVERAGE, strict_pa: bool = False) -> ScanReport:
    """``corpus`` is a list of ``(name, Proof)``; every proof must be Accepted."""
    if coverage < 0:
        raise ValueError("coverage must be a natural number")
    goals, hyps = [], []
    for name, proof in corpus:
        report = check_proof(proof, strict_pa=strict_pa)
        if not report.accepted:
            raise UncheckedProofError(f"{name}: proof rejected at line {report.failing_line}: {report.reason}")
        goals.append((name, proof.goal))
        for h in report.hypotheses:
            text = print_formula(h, "sugared")
            if text not in hyps:
                hyps.append(text)

    by_key: dict = {}
    for name, g in goals:
        by_key.setdefault(alpha_key(g), []).append(name)

    pairs, patterns = [], []
    for name, g in goals:
        if not (isinstance(g, Not) and isinstance(g.body, ForAll)):
            continue
        text = print_formula(g.body, "sugared")
        for pos in by_key.get(alpha_key(g.body), []):
            pairs.append((pos, name, text))
        x, body = g.body.var, g.body.body
        instances = []
        for n in range(coverage + 1):
            found = by_key.get(alpha_key(substitute(body, x, numeral(n))))
            if not found:
                break
            instances.append(found[0])
        else:
            patterns.append((name, text, tuple(instances)))

    return ScanReport(coverage, tuple((n, print_formula(g, "sugared")) for n, g in goals),
                      tuple(hyps), tuple(pairs), tuple(patterns))
