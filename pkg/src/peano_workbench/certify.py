"""Structural certificates for formulas over N.

Terms normalise to polynomials with natural coefficients.  An equation is
valid when both sides have the same normal form, and unsatisfiable when the
difference is sign-definite with a nonzero constant.  Compound formulas are
certified by a propositional check over their atoms and quantified
subformulas; a falsifying row is discarded when linear algebra on the atom
polynomials shows it cannot occur.  Quantifiers are certified by
generalisation (``(Ay)C`` is valid if ``C`` is) and by instantiation at
subterms (``(Ay)C`` is unsatisfiable if some ``C[t/y]`` is).

Everything here is sound for every assignment over N, not only up to a bound.
``certify`` answers ``VALID``, ``UNSAT`` or ``None`` (no certificate).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .syntax import (
    Add, Eq, Formula, ForAll, Implies, Mul, Not, Rel, Succ, Term, Var, Zero,
    alpha_key, formula_terms, subterms, substitute, term_vars,
)

VALID = "valid"
UNSAT = "unsat"

MAX_UNITS = 16

# a polynomial is a frozenset of (monomial, coefficient); a monomial is a
# sorted tuple of (variable index, exponent); the constant monomial is ()


def _mono_mul(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _add(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
        if out[m] == 0:
            del out[m]
    return out


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
            if out[m] == 0:
                del out[m]
    return out


@lru_cache(maxsize=65536)
def _poly(t: Term) -> frozenset:
    return frozenset(_poly_dict(t).items())


def _poly_dict(t: Term) -> dict:
    depth = 0
    while isinstance(t, Succ):
        depth += 1
        t = t.arg
    if isinstance(t, Zero):
        base: dict = {}
    elif isinstance(t, Var):
        base = {((t.index, 1),): 1}
    elif isinstance(t, Add):
        base = _add(dict(_poly(t.left)), dict(_poly(t.right)))
    elif isinstance(t, Mul):
        base = _mul(dict(_poly(t.left)), dict(_poly(t.right)))
    else:
        raise TypeError(f"not a term: {t!r}")
    return _add(base, {(): depth}) if depth else base


def polynomial(t: Term) -> dict:
    """Normal form of ``t`` as ``{monomial: coefficient}``."""
    return dict(_poly(t))


def difference(eq: Eq) -> dict:
    return _add(polynomial(eq.left), polynomial(eq.right), -1)


def _canonical(diff: dict) -> tuple:
    """Key identifying ``p = 0`` up to the sign of ``p``."""
    items = tuple(sorted(diff.items()))
    neg = tuple(sorted((m, -c) for m, c in diff.items()))
    return min(items, neg)


def atom_status(eq: Eq):
    diff = difference(eq)
    if not diff:
        return VALID
    const = diff.get((), 0)
    coeffs = diff.values()
    if const > 0 and all(c >= 0 for c in coeffs):
        return UNSAT
    if const < 0 and all(c <= 0 for c in coeffs):
        return UNSAT
    return None


# propositional skeleton


class _Skeleton:
    """Collects the units (atoms and quantified subformulas) of a formula."""

    def __init__(self):
        self.keys: dict = {}       # unit key -> unit index
        self.polys: list = []      # per unit: diff polynomial for equations, else None
        self.status: list = []     # per unit: VALID | UNSAT | None

    def unit(self, f: Formula) -> int:
        if isinstance(f, Eq):
            diff = difference(f)
            key = ("eq", _canonical(diff))
            poly, status = diff, atom_status(f)
        elif isinstance(f, ForAll):
            key = ("all", alpha_key(f))
            poly, status = None, _quantifier_status(f)
        else:
            key = ("rel", f.name, tuple(frozenset(polynomial(a).items()) for a in f.args))
            poly, status = None, None
        if key not in self.keys:
            self.keys[key] = len(self.polys)
            self.polys.append(poly)
            self.status.append(status)
        return self.keys[key]

    def compile(self, f: Formula):
        """Return a tree of unit indices usable by :func:`_eval`."""
        if isinstance(f, Not):
            return ("not", self.compile(f.body))
        if isinstance(f, Implies):
            return ("imp", self.compile(f.antecedent), self.compile(f.consequent))
        return self.unit(f)


def _eval(node, row) -> bool:
    if isinstance(node, int):
        return row[node]
    if node[0] == "not":
        return not _eval(node[1], row)
    return (not _eval(node[1], row)) or _eval(node[2], row)


def _rank(vectors: list, monos: list) -> int:
    rows = [[Fraction(v.get(m, 0)) for m in monos] for v in vectors]
    rank = 0
    for col in range(len(monos)):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                k = rows[r][col] / rows[rank][col]
                rows[r] = [a - k * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _infeasible(row, polys) -> bool:
    """True when the equations marked true force a contradiction."""
    zeros = [polys[i] for i, v in enumerate(row) if v and polys[i] is not None]
    nonzeros = [polys[i] for i, v in enumerate(row) if not v and polys[i] is not None]
    if not zeros:
        return False
    monos = sorted({m for p in zeros + nonzeros for m in p} | {()})
    base = _rank(zeros, monos)
    if _rank(zeros + [{(): 1}], monos) == base:
        return True
    return any(_rank(zeros + [p], monos) == base for p in nonzeros)


def _tautology(f: Formula, want: bool) -> bool:
    """Does every realisable row give ``f`` the value ``want``?"""
    sk = _Skeleton()
    tree = sk.compile(f)
    free = [i for i, s in enumerate(sk.status) if s is None]
    if len(free) > MAX_UNITS:
        return False
    fixed = {i: s == VALID for i, s in enumerate(sk.status) if s is not None}
    for bits in product((False, True), repeat=len(free)):
        row = [fixed.get(i, False) for i in range(len(sk.status))]
        for i, b in zip(free, bits):
            row[i] = b
        if _eval(tree, row) != want and not _infeasible(row, sk.polys):
            return False
    return True


def _candidates(f: ForAll) -> list:
    seen = {Zero(): None}
    for t in formula_terms(f.body):
        for s in subterms(t):
            if f.var not in term_vars(s):
                seen.setdefault(s, None)
    return list(seen)


def _quantifier_status(f: ForAll):
    inner = certify(f.body)
    if inner == VALID:
        return VALID
    for t in _candidates(f):
        if certify(substitute(f.body, f.var, t)) == UNSAT:
            return UNSAT
    return None


@lru_cache(maxsize=65536)
def certify(f: Formula):
    """``VALID`` if ``f`` holds under every assignment, ``UNSAT`` if under none, else ``None``."""
    if isinstance(f, Eq):
        return atom_status(f)
    if isinstance(f, Rel):
        return None
    if isinstance(f, ForAll):
        return _quantifier_status(f)
    if _tautology(f, True):
        return VALID
    if _tautology(f, False):
        return UNSAT
    return None
