"""Abstract syntax of first-order Peano Arithmetic.

Terms are built from ``0``, variables, successor, ``+`` and ``*``.  The
stored formula language has exactly one atom shape (``Eq``), plus ``Not``,
``Implies`` and ``ForAll``.  Existential quantification, conjunction and
disjunction are abbreviations: they are written with the sugar nodes
``Exists``/``And``/``Or`` and expanded by :func:`desugar` before anything
else sees them.

``Rel`` is an extension atom naming an externally interpreted relation
(e.g. the digit and halting relations of :mod:`peano_workbench.evidence`).
It is not part of PA proper; the proof kernel never matches it.

All nodes are frozen dataclasses, so formulas hash, compare structurally
and can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

_LETTERS = "xyzuvw"
_FAMILY = 1_000_000


class Term:
    __slots__ = ()


class Formula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class Var(Term):
    """The variable with the given positive index.

    Indices ``1..999999`` render as ``x1, x2, ...``; each further block of a
    million indices renders with the next letter of ``xyzuvw`` so that
    ``y1``, ``z3`` etc. are distinct variables with stable names.
    """

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"variable index must be a positive integer, got {self.index!r}")
        if self.index > _FAMILY * len(_LETTERS):
            raise ValueError(f"variable index {self.index} out of range")

    @property
    def name(self) -> str:
        family, k = divmod(self.index - 1, _FAMILY)
        return f"{_LETTERS[family]}{k + 1}"

    @classmethod
    def named(cls, name: str) -> "Var":
        letter, digits = name[0], name[1:]
        if letter not in _LETTERS or not digits.isdigit() or int(digits) < 1:
            raise ValueError(f"not a variable name: {name!r}")
        k = int(digits)
        if k >= _FAMILY:
            raise ValueError(f"variable subscript too large: {name!r}")
        return cls(_LETTERS.index(letter) * _FAMILY + k)

    def __repr__(self):
        return self.name


Variable = Var


@dataclass(frozen=True, slots=True)
class Succ(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Rel(Formula):
    """Atom ``name(args...)`` for an externally interpreted relation."""

    name: str
    args: tuple

    def __post_init__(self):
        if not self.name or not self.name[0].isupper() or self.name in ("A", "E"):
            raise ValueError(f"bad relation name {self.name!r}")
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True, slots=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    antecedent: Formula
    consequent: Formula


@dataclass(frozen=True, slots=True)
class ForAll(Formula):
    var: Var
    body: Formula


# sugar: descriptions that desugar() expands; never stored in a Formula


@dataclass(frozen=True)
class Exists:
    var: Var
    body: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


Sugared = Union[Formula, Exists, And, Or]


def desugar(desc: Sugared) -> Formula:
    """Expand ``Exists``/``And``/``Or`` anywhere in ``desc`` into ``~``, ``->``, ``A``."""
    if isinstance(desc, Exists):
        return Not(ForAll(desc.var, Not(desugar(desc.body))))
    if isinstance(desc, And):
        return Not(Implies(desugar(desc.left), Not(desugar(desc.right))))
    if isinstance(desc, Or):
        return Implies(Not(desugar(desc.left)), desugar(desc.right))
    if isinstance(desc, Not):
        return Not(desugar(desc.body))
    if isinstance(desc, Implies):
        return Implies(desugar(desc.antecedent), desugar(desc.consequent))
    if isinstance(desc, ForAll):
        return ForAll(desc.var, desugar(desc.body))
    if isinstance(desc, (Eq, Rel)):
        return desc
    raise TypeError(f"not a formula description: {desc!r}")


def exists(var: Var, body: Formula) -> Formula:
    return Not(ForAll(var, Not(body)))


def conj(left: Formula, right: Formula) -> Formula:
    return Not(Implies(left, Not(right)))


def disj(left: Formula, right: Formula) -> Formula:
    return Implies(Not(left), right)


def iff(left: Formula, right: Formula) -> Formula:
    return conj(Implies(left, right), Implies(right, left))


def is_primitive(f) -> bool:
    """True when no sugar node occurs anywhere in ``f``."""
    if isinstance(f, (Eq, Rel)):
        return True
    if isinstance(f, Not):
        return is_primitive(f.body)
    if isinstance(f, Implies):
        return is_primitive(f.antecedent) and is_primitive(f.consequent)
    if isinstance(f, ForAll):
        return is_primitive(f.body)
    return False


# numerals


@dataclass(frozen=True)
class Numeral:
    value: int
    term: Term


ZERO = Zero()


def numeral(n: int) -> Term:
    if n < 0:
        raise ValueError("numerals denote natural numbers")
    t: Term = ZERO
    for _ in range(n):
        t = Succ(t)
    return t


def mk_numeral(n: int) -> Numeral:
    return Numeral(n, numeral(n))


def successor_depth(t: Term) -> int:
    depth = 0
    while isinstance(t, Succ):
        depth += 1
        t = t.arg
    return depth


def numeral_value(t: Term) -> int | None:
    """Value of ``t`` if it is a numeral ``0''...'``, else ``None``."""
    depth = 0
    while isinstance(t, Succ):
        depth += 1
        t = t.arg
    return depth if isinstance(t, Zero) else None


# free variables


def term_vars(t: Term) -> frozenset:
    out = set()
    stack = [t]
    while stack:
        t = stack.pop()
        if isinstance(t, Var):
            out.add(t)
        elif isinstance(t, Succ):
            stack.append(t.arg)
        elif isinstance(t, (Add, Mul)):
            stack.append(t.left)
            stack.append(t.right)
    return frozenset(out)


def free_variables(f: Formula) -> frozenset:
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Rel):
        out = frozenset()
        for a in f.args:
            out |= term_vars(a)
        return out
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, Implies):
        return free_variables(f.antecedent) | free_variables(f.consequent)
    if isinstance(f, ForAll):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_closed(f: Formula) -> bool:
    return not free_variables(f)


def all_variables(f: Formula) -> frozenset:
    """Free and bound variables of ``f``."""
    if isinstance(f, (Eq, Rel)):
        return free_variables(f)
    if isinstance(f, Not):
        return all_variables(f.body)
    if isinstance(f, Implies):
        return all_variables(f.antecedent) | all_variables(f.consequent)
    return all_variables(f.body) | {f.var}


def sorted_vars(vs) -> list:
    return sorted(vs, key=lambda v: v.index)


def universal_closure(f: Formula) -> Formula:
    """Quantify every free variable, smallest index outermost."""
    for v in reversed(sorted_vars(free_variables(f))):
        f = ForAll(v, f)
    return f


# substitution


def substitute_term(t: Term, x: Var, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t == x else t
    if isinstance(t, Zero):
        return t
    if isinstance(t, Succ):
        # numerals can be deep; unwind successor chains iteratively
        depth = 0
        while isinstance(t, Succ):
            depth += 1
            t = t.arg
        inner = substitute_term(t, x, s)
        for _ in range(depth):
            inner = Succ(inner)
        return inner
    if isinstance(t, Add):
        return Add(substitute_term(t.left, x, s), substitute_term(t.right, x, s))
    if isinstance(t, Mul):
        return Mul(substitute_term(t.left, x, s), substitute_term(t.right, x, s))
    raise TypeError(f"not a term: {t!r}")


def fresh_var(*avoid) -> Var:
    """Smallest-index variable not in any of the given variable sets."""
    used = set()
    for vs in avoid:
        used |= {v.index for v in vs}
    i = 1
    while i in used:
        i += 1
    return Var(i)


def substitute(f: Formula, x: Var, t: Term) -> Formula:
    """Replace the free occurrences of ``x`` in ``f`` by ``t``.

    A binder that would capture a variable of ``t`` is renamed to the
    smallest index free in neither ``f`` nor ``t``.
    """
    return _subst(f, x, t, term_vars(t))


def _subst(f: Formula, x: Var, t: Term, tvars: frozenset) -> Formula:
    if isinstance(f, Eq):
        return Eq(substitute_term(f.left, x, t), substitute_term(f.right, x, t))
    if isinstance(f, Rel):
        return Rel(f.name, tuple(substitute_term(a, x, t) for a in f.args))
    if isinstance(f, Not):
        return Not(_subst(f.body, x, t, tvars))
    if isinstance(f, Implies):
        return Implies(_subst(f.antecedent, x, t, tvars), _subst(f.consequent, x, t, tvars))
    if isinstance(f, ForAll):
        y = f.var
        if y == x or x not in free_variables(f.body):
            return f
        body = f.body
        if y in tvars:
            z = fresh_var(free_variables(f), tvars, {x})
            body = _subst(body, y, z, frozenset({z}))
            y = z
        return ForAll(y, _subst(body, x, t, tvars))
    raise TypeError(f"not a formula: {f!r}")


def substitution_is_free(f: Formula, x: Var, t: Term) -> bool:
    """True when no free occurrence of ``x`` in ``f`` lies under a binder of a variable of ``t``."""
    return _free_for(f, x, term_vars(t), frozenset())


def _free_for(f, x, tvars, bound) -> bool:
    if isinstance(f, (Eq, Rel)):
        return x not in free_variables(f) or not (tvars & bound)
    if isinstance(f, Not):
        return _free_for(f.body, x, tvars, bound)
    if isinstance(f, Implies):
        return _free_for(f.antecedent, x, tvars, bound) and _free_for(f.consequent, x, tvars, bound)
    if f.var == x:
        return True
    return _free_for(f.body, x, tvars, bound | {f.var})


# alpha-equivalence


def alpha_key(f: Formula):
    """Hashable key identifying ``f`` up to renaming of bound variables."""
    return _alpha(f, {}, 0)


def _alpha_term(t, env):
    if isinstance(t, Var):
        return ("b", env[t]) if t in env else ("f", t.index)
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Succ):
        return ("s", _alpha_term(t.arg, env))
    if isinstance(t, Add):
        return ("+", _alpha_term(t.left, env), _alpha_term(t.right, env))
    return ("*", _alpha_term(t.left, env), _alpha_term(t.right, env))


def _alpha(f, env, depth):
    if isinstance(f, Eq):
        return ("=", _alpha_term(f.left, env), _alpha_term(f.right, env))
    if isinstance(f, Rel):
        return ("R", f.name) + tuple(_alpha_term(a, env) for a in f.args)
    if isinstance(f, Not):
        return ("~", _alpha(f.body, env, depth))
    if isinstance(f, Implies):
        return ("->", _alpha(f.antecedent, env, depth), _alpha(f.consequent, env, depth))
    inner = dict(env)
    inner[f.var] = depth
    return ("A", _alpha(f.body, inner, depth + 1))


def alpha_equivalent(f: Formula, g: Formula) -> bool:
    return f == g or alpha_key(f) == alpha_key(g)


def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, Succ):
        yield from subterms(t.arg)
    elif isinstance(t, (Add, Mul)):
        yield from subterms(t.left)
        yield from subterms(t.right)


def formula_terms(f: Formula) -> Iterator[Term]:
    """Every term occurrence (and subterm) in ``f``."""
    if isinstance(f, Eq):
        yield from subterms(f.left)
        yield from subterms(f.right)
    elif isinstance(f, Rel):
        for a in f.args:
            yield from subterms(a)
    elif isinstance(f, Not):
        yield from formula_terms(f.body)
    elif isinstance(f, Implies):
        yield from formula_terms(f.antecedent)
        yield from formula_terms(f.consequent)
    else:
        yield from formula_terms(f.body)


def quantifier_depth(f: Formula) -> int:
    if isinstance(f, (Eq, Rel)):
        return 0
    if isinstance(f, Not):
        return quantifier_depth(f.body)
    if isinstance(f, Implies):
        return max(quantifier_depth(f.antecedent), quantifier_depth(f.consequent))
    return 1 + quantifier_depth(f.body)
