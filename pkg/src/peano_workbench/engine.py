"""Satisfaction and truth over N, with certified and bounded verdicts.

``satisfies`` follows the inductive clauses for ``~``, ``->`` and ``A``.  A
universal quantifier is checked on the variants 0..bound; a counterexample
settles it, and a universal "yes" is only certified when a uniform argument
exists (a polynomial certificate or a synthesized decider).  Otherwise the
result is ``VerifiedUpTo(bound)``.

Relation atoms ``Name(t, ...)`` are looked up in a relation table supplied by
the caller (see :mod:`peano_workbench.evidence`).  In ``algorithmic`` mode a
relation without a uniform decider only yields per-instance evidence, so its
atoms are never certified.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from . import certify as cert
from .kernel import PA_AXIOMS, AxiomId, induction_instance, pa_instance
from .notation import print_formula
from .syntax import (
    Add, Eq, Formula, ForAll, Implies, Mul, Not, Rel, Succ, Term, Var, Zero,
    free_variables, numeral, sorted_vars, substitute, term_vars, universal_closure,
)

DEFAULT_BOUND = 64
MODES = ("standard", "algorithmic")
# largest assignment value substituted as a numeral when looking for a certificate
_NUMERAL_LIMIT = 4096


class EngineError(ValueError):
    pass


# assignments


@dataclass(frozen=True)
class Assignment:
    """A sequence ``s(1), s(2), ...`` of naturals: finite support plus a default."""

    support: tuple = ()          # sorted (index, value) pairs
    default: int = 0

    @classmethod
    def of(cls, values: Optional[Mapping] = None, default: int = 0) -> "Assignment":
        items = {}
        for k, v in (values or {}).items():
            i = k.index if isinstance(k, Var) else int(k)
            if i < 1 or v < 0:
                raise EngineError("assignments map positive indices to naturals")
            items[i] = int(v)
        return cls(tuple(sorted(items.items())), default)

    def __call__(self, i: int) -> int:
        for k, v in self.support:
            if k == i:
                return v
        return self.default

    def lookup(self, x: Var) -> int:
        return self(x.index)

    def variant(self, x: Var, value: int) -> "Assignment":
        """The assignment differing from this one at most in ``x``."""
        items = dict(self.support)
        items[x.index] = value
        return Assignment(tuple(sorted(items.items())), self.default)


# evidence and verdicts


@dataclass(frozen=True)
class Instance:
    inputs: tuple
    value: Optional[bool]
    steps: int

    def to_dict(self):
        return {"input": list(self.inputs), "value": self.value, "steps": self.steps}


@dataclass(frozen=True)
class Evidence:
    algorithm_id: str
    method: str                  # "uniform" | "per-instance"
    instances: tuple = ()
    label: str = ""

    @property
    def trace_digest(self) -> str:
        body = json.dumps(self._body(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(body.encode()).hexdigest()

    def _body(self):
        return {"algorithm_id": self.algorithm_id, "method": self.method,
                "instances": [i.to_dict() for i in self.instances], "label": self.label}

    def to_dict(self):
        d = self._body()
        d["trace_digest"] = self.trace_digest
        return d


TRUE_CERTIFIED = "TrueCertified"
FALSE_CERTIFIED = "FalseCertified"
VERIFIED_UP_TO = "VerifiedUpTo"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    kind: str
    value: Optional[bool]        # certified value, or the bounded leaning
    bound: Optional[int]
    evidence: Evidence

    @property
    def certified(self) -> bool:
        return self.kind in (TRUE_CERTIFIED, FALSE_CERTIFIED)

    @property
    def polarity(self) -> str:
        return {True: "all-true", False: "all-false", None: "undetermined"}[self.value]

    @property
    def steps(self) -> int:
        return sum(i.steps for i in self.evidence.instances) or 1

    def to_dict(self):
        d = {"kind": self.kind, "value": self.value, "evidence": self.evidence.to_dict()}
        if self.kind == VERIFIED_UP_TO:
            d["bound"] = self.bound
            d["polarity"] = self.polarity
        return d


def _certified(value: bool, evidence: Evidence) -> Verdict:
    return Verdict(TRUE_CERTIFIED if value else FALSE_CERTIFIED, value, None, evidence)


def _bounded(value: Optional[bool], bound: int, evidence: Evidence) -> Verdict:
    return Verdict(VERIFIED_UP_TO if value is not None else UNKNOWN, value, bound, evidence)


# deciders and satisfaction methods


@dataclass(frozen=True)
class Decider:
    """A terminating procedure deciding a formula under any assignment."""

    description: str
    domain_note: str
    run: Callable = field(compare=False, repr=False)   # Assignment -> (bool, steps)

    def __call__(self, s: Assignment) -> bool:
        return self.run(s)[0]


@dataclass(frozen=True)
class NotFound:
    reason: str
    subformula: str = ""

    def __str__(self):
        return f"{self.reason}: {self.subformula}" if self.subformula else self.reason


def _count_eval(t: Term, s: Assignment):
    """Value of ``t`` under ``s`` plus the number of term nodes visited."""
    depth = 0
    while isinstance(t, Succ):
        depth += 1
        t = t.arg
    if isinstance(t, Zero):
        return depth, depth + 1
    if isinstance(t, Var):
        return s.lookup(t) + depth, depth + 1
    a, sa = _count_eval(t.left, s)
    b, sb = _count_eval(t.right, s)
    v = a + b if isinstance(t, Add) else a * b
    return v + depth, sa + sb + depth + 1


def eval_term(t: Term, s: Optional[Assignment] = None) -> int:
    if not isinstance(t, (Zero, Var, Succ, Add, Mul)):
        raise TypeError(f"not a term: {t!r}")
    return _count_eval(t, s or Assignment())[0]


def _atom_decider_run(f: Eq) -> Callable:
    def run(s):
        a, sa = _count_eval(f.left, s)
        b, sb = _count_eval(f.right, s)
        return a == b, sa + sb + 1
    return run


TERM_EVALUATION = "term-evaluation"


@dataclass(frozen=True)
class SatisfactionMethod:
    """Atomic decider plus the label of the witness that supplies it."""

    atomic_decider: str = TERM_EVALUATION
    witness_label: str = "W_N"


STANDARD_SM = SatisfactionMethod()


def decide_atom(f: Eq, s: Optional[Assignment] = None, sm: SatisfactionMethod = STANDARD_SM):
    """Decide ``t1 = t2`` by evaluating both sides; returns ``(bool, Evidence)``."""
    if not isinstance(f, Eq):
        raise EngineError("decide_atom expects an equation")
    s = s or Assignment()
    a, sa = _count_eval(f.left, s)
    b, sb = _count_eval(f.right, s)
    ev = Evidence(f"atom:{sm.atomic_decider}", "uniform", (Instance((a, b), a == b, sa + sb + 1),))
    return a == b, ev


# relations supplied from outside the arithmetic


@dataclass(frozen=True)
class Decision:
    value: Optional[bool]        # None: no verdict obtained
    steps: int
    note: str = ""


class RelationDomainError(EngineError):
    pass


@dataclass(frozen=True)
class Relation:
    name: str
    arity: int
    decide: Callable = field(compare=False, repr=False)    # tuple of naturals -> Decision
    uniform: bool
    description: str
    algorithm_id: str


def _relation(relations, f: Rel) -> Relation:
    rel = (relations or {}).get(f.name)
    if rel is None:
        raise EngineError(f"unknown relation {f.name!r}")
    if rel.arity != len(f.args):
        raise EngineError(f"relation {f.name} takes {rel.arity} argument(s)")
    return rel


# uniform deciders


def _order_bound(f: Formula, x: Var):
    """Match ``(Ez)(x + z = t)`` (x <= t) or ``(Ez)(x + z' = t)`` (x < t).

    Returns ``(t, strict)`` or ``None``.  Commuted sums and ``(x + z)'`` are
    accepted, as is the equation written either way round.
    """
    if not (isinstance(f, Not) and isinstance(f.body, ForAll) and isinstance(f.body.body, Not)):
        return None
    z, eq = f.body.var, f.body.body.body
    if not isinstance(eq, Eq) or z == x:
        return None
    for side, t in ((eq.left, eq.right), (eq.right, eq.left)):
        if x in term_vars(t) or z in term_vars(t):
            continue
        strict = False
        if isinstance(side, Succ):
            strict, side = True, side.arg
        if not isinstance(side, Add):
            continue
        ops = (side.left, side.right)
        if x not in ops:
            continue
        other = ops[1] if ops[0] == x else ops[0]
        if other == z:
            return t, strict
        if not strict and other == Succ(z):
            return t, True
    return None


def _bounded_pattern(f: ForAll):
    body = f.body
    while isinstance(body, Not) and isinstance(body.body, Not):
        body = body.body.body
    if not isinstance(body, Implies):
        return None
    found = _order_bound(body.antecedent, f.var)
    if found is None:
        return None
    return found[0], found[1], body.consequent


def _constant_decider(value: bool, f: Formula) -> Decider:
    return Decider(f"structural certificate: {'valid' if value else 'unsatisfiable'} "
                   "by polynomial normal form",
                   "every assignment", lambda s: (value, 1))


def synthesize_uniform_decider(f: Formula, relations=None):
    """A :class:`Decider` for ``f`` or :class:`NotFound` naming the blocking subformula."""
    status = cert.certify(f)
    if status is not None:
        return _constant_decider(status == cert.VALID, f)
    return _synth(f, relations)


def _synth(f: Formula, relations):
    if isinstance(f, Eq):
        return Decider("quantifier-free: term evaluation", "every assignment", _atom_decider_run(f))
    if isinstance(f, Rel):
        rel = (relations or {}).get(f.name)
        if rel is None:
            return NotFound("unknown relation", f.name)
        if not rel.uniform:
            return NotFound("unbounded search subformula", print_formula(f))
        args = f.args

        def run_rel(s, rel=rel, args=args):
            vals, steps = [], 0
            for a in args:
                v, k = _count_eval(a, s)
                vals.append(v)
                steps += k
            d = rel.decide(tuple(vals))
            return bool(d.value), steps + d.steps
        return Decider(f"relation {rel.name}: {rel.algorithm_id}", "every argument tuple", run_rel)
    if isinstance(f, Not):
        inner = _synth(f.body, relations)
        if isinstance(inner, NotFound):
            return inner
        return Decider(f"negation of ({inner.description})", inner.domain_note,
                       lambda s, r=inner.run: (lambda v: (not v[0], v[1] + 1))(r(s)))
    if isinstance(f, Implies):
        a = _synth(f.antecedent, relations)
        if isinstance(a, NotFound):
            return a
        b = _synth(f.consequent, relations)
        if isinstance(b, NotFound):
            return b

        def run_imp(s, ra=a.run, rb=b.run):
            va, sa = ra(s)
            if not va:
                return True, sa + 1
            vb, sb = rb(s)
            return vb, sa + sb + 1
        return Decider("implication of deciders", "every assignment", run_imp)
    status = cert.certify(f)
    if status is not None:
        return _constant_decider(status == cert.VALID, f)
    pattern = _bounded_pattern(f)
    if pattern is None:
        return NotFound("unbounded quantifier", print_formula(f))
    t, strict, matrix = pattern
    inner = _synth(matrix, relations)
    if isinstance(inner, NotFound):
        return inner
    x = f.var

    def run_bounded(s, t=t, strict=strict, r=inner.run):
        top, steps = _count_eval(t, s)
        for k in range(top if strict else top + 1):
            v, n = r(s.variant(x, k))
            steps += n
            if not v:
                return False, steps
        return True, steps + 1
    op = "<" if strict else "<="
    return Decider(f"bounded quantifier {x.name} {op} term: finite enumeration",
                   "every assignment", run_bounded)


# satisfaction


class _Evaluator:
    def __init__(self, bound: int, mode: str, relations, sm: SatisfactionMethod):
        if bound < 1:
            raise EngineError("empty enumeration bound")
        if mode not in MODES:
            raise EngineError(f"unknown mode {mode!r}")
        self.bound = bound
        self.mode = mode
        self.relations = relations or {}
        self.sm = sm
        self._deciders: dict = {}

    def decider(self, f: Formula):
        if f not in self._deciders:
            self._deciders[f] = synthesize_uniform_decider(f, self.relations)
        return self._deciders[f]

    def sat(self, f: Formula, s: Assignment) -> Verdict:
        if isinstance(f, Eq):
            value, ev = decide_atom(f, s, self.sm)
            return _certified(value, ev)
        if isinstance(f, Rel):
            return self.rel(f, s)
        if isinstance(f, Not):
            v = self.sat(f.body, s)
            kind = {TRUE_CERTIFIED: FALSE_CERTIFIED, FALSE_CERTIFIED: TRUE_CERTIFIED}.get(v.kind, v.kind)
            value = None if v.value is None else not v.value
            ev = v.evidence
            if ev.label.startswith("counterexample "):
                # a counterexample to (Ax)~A is a witness for (Ex)A
                ev = Evidence(ev.algorithm_id, ev.method, ev.instances,
                              "witness " + ev.label[len("counterexample "):])
            return Verdict(kind, value, v.bound, ev)
        if isinstance(f, Implies):
            return self.implies(f, s)
        if isinstance(f, ForAll):
            return self.forall(f, s)
        raise TypeError(f"not a primitive formula: {f!r}")

    def rel(self, f: Rel, s: Assignment) -> Verdict:
        rel = _relation(self.relations, f)
        args = tuple(eval_term(a, s) for a in f.args)
        try:
            d = rel.decide(args)
        except RelationDomainError as e:
            return _bounded(None, self.bound, Evidence(rel.algorithm_id, "per-instance", label=str(e)))
        method = "uniform" if rel.uniform else "per-instance"
        ev = Evidence(rel.algorithm_id, method, (Instance(args, d.value, max(d.steps, 1)),), d.note)
        if d.value is None:
            return _bounded(None, self.bound, ev)
        if rel.uniform or self.mode == "standard":
            return _certified(d.value, ev)
        return _bounded(d.value, self.bound, ev)

    def implies(self, f: Implies, s: Assignment) -> Verdict:
        a = self.sat(f.antecedent, s)
        inst = [Instance(("antecedent",), a.value, a.steps)]
        if a.kind == FALSE_CERTIFIED:
            return _certified(True, Evidence("implication", "uniform", tuple(inst)))
        b = self.sat(f.consequent, s)
        inst.append(Instance(("consequent",), b.value, b.steps))
        ev = Evidence("implication", "uniform" if a.certified and b.certified else "per-instance",
                      tuple(inst))
        if b.kind == TRUE_CERTIFIED:
            return _certified(True, ev)
        if a.kind == TRUE_CERTIFIED and b.kind == FALSE_CERTIFIED:
            return _certified(False, ev)
        if a.value is False or b.value is True:
            value = True
        elif a.value is True and b.value is False:
            value = False
        else:
            value = None
        return _bounded(value, self.bound, ev)

    def forall(self, f: ForAll, s: Assignment) -> Verdict:
        x = f.var
        rows, leaning = [], True
        for k in range(self.bound + 1):
            v = self.sat(f.body, s.variant(x, k))
            rows.append(Instance((k,), v.value, v.steps))
            if v.kind == FALSE_CERTIFIED:
                ev = Evidence("enumeration", "per-instance", tuple(rows),
                              f"counterexample {x.name}={k}")
                return _certified(False, ev)
            if v.value is None:
                leaning = None
            elif v.value is False and leaning is not None:
                leaning = False
        rows = tuple(rows)
        certificate = self.certificate(f, s)
        if certificate is not None:
            value, label = certificate
            return _certified(value, Evidence(label, "uniform", rows))
        return _bounded(leaning, self.bound, Evidence("enumeration", "per-instance", rows,
                                                      f"{x.name} in 0..{self.bound}"))

    def certificate(self, f: ForAll, s: Assignment):
        status = cert.certify(f)
        if status is None:
            free = sorted_vars(free_variables(f))
            if free and all(s.lookup(v) <= _NUMERAL_LIMIT for v in free):
                g = f
                for v in free:
                    g = substitute(g, v, numeral(s.lookup(v)))
                status = cert.certify(g)
        if status is not None:
            return status == cert.VALID, "certificate:polynomial-normal-form"
        d = self.decider(f)
        if isinstance(d, Decider):
            return d(s), f"decider:{d.description}"
        return None


def satisfies(f: Formula, s: Optional[Assignment] = None, bound: int = DEFAULT_BOUND,
              mode: str = "standard", relations=None, sm: SatisfactionMethod = STANDARD_SM) -> Verdict:
    """Does ``s`` satisfy ``f``?  Quantifiers are enumerated over 0..bound."""
    return _Evaluator(bound, mode, relations, sm).sat(f, s or Assignment())


def truth(f: Formula, bound: int = DEFAULT_BOUND, mode: str = "standard", relations=None) -> Verdict:
    """Truth of ``f``: satisfaction of its universal closure."""
    return satisfies(universal_closure(f), Assignment(), bound, mode, relations)


# verification tables


@dataclass(frozen=True)
class Row:
    inputs: tuple
    kind: str
    value: Optional[bool]
    steps: int

    def to_dict(self):
        return {"input": list(self.inputs), "kind": self.kind, "value": self.value, "steps": self.steps}


@dataclass(frozen=True)
class VerifyTable:
    formula: str
    n: int
    variables: tuple
    rows: tuple

    @property
    def decided(self) -> bool:
        return all(r.kind in (TRUE_CERTIFIED, FALSE_CERTIFIED) for r in self.rows)

    @property
    def polarity(self) -> str:
        values = {r.value for r in self.rows}
        if None in values:
            return "undetermined"
        if values == {True}:
            return "all-true"
        if values == {False}:
            return "all-false"
        return "mixed"

    @property
    def evidence(self) -> Evidence:
        return Evidence(f"table:{self.n}", "per-instance",
                        tuple(Instance(r.inputs, r.value, r.steps) for r in self.rows))

    def to_dict(self):
        return {"formula": self.formula, "n": self.n, "variables": list(self.variables),
                "rows": [r.to_dict() for r in self.rows], "polarity": self.polarity,
                "decided": self.decided, "trace_digest": self.evidence.trace_digest}


def _grid(k: int, n: int):
    if k == 1:
        for i in range(1, n + 1):
            yield (i,)
        return
    from itertools import product
    yield from product(range(n + 1), repeat=k)


def verify_up_to(f: Formula, n: int, relations=None, mode: str = "standard") -> VerifyTable:
    """Decide every instance of ``f``: one variable over 1..n, several over {0..n}^k."""
    if n < 1:
        raise EngineError("empty enumeration bound")
    xs = tuple(sorted_vars(free_variables(f)))
    if not xs:
        raise EngineError("no free variables")
    ev = _Evaluator(n, mode, relations, STANDARD_SM)
    rows = []
    for vals in _grid(len(xs), n):
        v = ev.sat(f, Assignment.of(dict(zip(xs, vals))))
        rows.append(Row(vals, v.kind, v.value, v.steps))
    return VerifyTable(print_formula(f, "sugared"), n, tuple(x.name for x in xs), tuple(rows))


# classification


COMPUTABLE = "Computable"
VERIFIABLE_ONLY = "VerifiableOnlyAtBound"
UNKNOWN_AT_BOUND = "UnknownAtBound"


@dataclass(frozen=True)
class Classification:
    kind: str
    bound: int
    detail: str
    evidence: Evidence

    def to_dict(self):
        return {"kind": self.kind, "bound": self.bound, "detail": self.detail,
                "evidence": self.evidence.to_dict()}


def classify(f: Formula, bound: int = DEFAULT_BOUND, relations=None) -> Classification:
    """Computable if a uniform decider exists; otherwise judged by the verification table at ``bound``.

    Every instance decided gives ``VerifiableOnlyAtBound``; any undecided
    instance gives ``UnknownAtBound``.
    """
    if bound < 1:
        raise EngineError("empty enumeration bound")
    d = synthesize_uniform_decider(f, relations)
    if isinstance(d, Decider):
        xs = sorted_vars(free_variables(f))
        v, steps = d.run(Assignment())
        ev = Evidence(f"decider:{d.description}", "uniform",
                      (Instance(tuple(0 for _ in xs), v, max(steps, 1)),))
        return Classification(COMPUTABLE, bound, d.description, ev)
    if free_variables(f):
        table = verify_up_to(f, bound, relations)
        kind = VERIFIABLE_ONLY if table.decided else UNKNOWN_AT_BOUND
        return Classification(kind, bound, f"{d}; table {table.polarity}", table.evidence)
    v = satisfies(f, Assignment(), bound, "standard", relations)
    kind = VERIFIABLE_ONLY if v.certified or v.kind == VERIFIED_UP_TO else UNKNOWN_AT_BOUND
    return Classification(kind, bound, f"{d}; verdict {v.kind}", v.evidence)


# axioms and rules


def check_axiom_truth(axiom, bound: int = DEFAULT_BOUND, terms: tuple = (), g: Optional[Formula] = None,
                      x: Optional[Var] = None, relations=None) -> Verdict:
    """Truth of an axiom instance.

    PA1-PA8 take optional instantiation ``terms`` and are certified by
    polynomial normal form.  PA9 needs the induction formula ``g`` (and its
    variable ``x``, default the smallest free variable) and follows the three
    cases: (a) G(0) false, (b) G(0) true and the step false, (c) both true.
    """
    axiom = AxiomId(axiom)
    if axiom not in PA_AXIOMS:
        raise EngineError(f"{axiom} is not a PA axiom")
    if axiom is not AxiomId.PA9:
        f = universal_closure(pa_instance(axiom, *terms))
        status = cert.certify(f)
        if status == cert.VALID:
            return _certified(True, Evidence(f"structural:{axiom}", "uniform",
                                             (Instance((), True, 1),), "polynomial normal form"))
        return truth(f, bound, relations=relations)
    if g is None:
        raise EngineError("PA9 needs an induction formula")
    if x is None:
        fv = sorted_vars(free_variables(g))
        if not fv:
            raise EngineError("induction formula has no free variable")
        x = fv[0]
    base = truth(substitute(g, x, Zero()), bound, relations=relations)
    step = truth(ForAll(x, Implies(g, substitute(g, x, Succ(x)))), bound, relations=relations)
    inst = (Instance(("G(0)",), base.value, base.steps), Instance(("step",), step.value, step.steps))
    if base.kind == FALSE_CERTIFIED:
        return _certified(True, Evidence("induction", "uniform", inst, "case (a)"))
    if base.kind == TRUE_CERTIFIED and step.kind == FALSE_CERTIFIED:
        return _certified(True, Evidence("induction", "uniform", inst, "case (b)"))
    if base.kind == TRUE_CERTIFIED and step.kind == TRUE_CERTIFIED:
        return _certified(True, Evidence("induction", "uniform", inst, "case (c)"))
    whole = truth(induction_instance(g, x), bound, relations=relations)
    value = True if whole.value is not False else False
    return _bounded(value, bound, Evidence("induction", "per-instance", inst, "undetermined case"))


@dataclass(frozen=True)
class RuleReport:
    rule: str
    premise_kinds: tuple
    conclusion: Verdict
    degraded: bool

    def to_dict(self):
        return {"rule": self.rule, "premise_kinds": list(self.premise_kinds),
                "conclusion": self.conclusion.to_dict(), "degraded": self.degraded}


def check_rule_preservation(rule: str, premises, conclusion: Formula, bound: int = DEFAULT_BOUND,
                            premise_verdicts=None, relations=None) -> RuleReport:
    """Re-evaluate the conclusion of an MP or Gen step and compare truth categories.

    MP premises are ``(A, A -> B)`` in either order.  When every premise is
    TrueCertified the rule itself is a uniform certificate for the conclusion.
    """
    rule = rule.upper()
    premises = tuple(premises)
    if rule == "MP":
        if len(premises) != 2:
            raise EngineError("MP takes two premises")
        a, imp = premises
        if not (isinstance(imp, Implies) and imp.antecedent == a):
            a, imp = imp, a
        if not (isinstance(imp, Implies) and imp.antecedent == a and imp.consequent == conclusion):
            raise EngineError("premise/conclusion shape mismatch")
    elif rule == "GEN":
        if len(premises) != 1:
            raise EngineError("Gen takes one premise")
        if not (isinstance(conclusion, ForAll) and conclusion.body == premises[0]):
            raise EngineError("premise/conclusion shape mismatch")
    else:
        raise EngineError(f"unknown rule {rule!r}")
    if premise_verdicts is None:
        premise_verdicts = [truth(p, bound, relations=relations) for p in premises]
    kinds = tuple(v.kind for v in premise_verdicts)
    v = truth(conclusion, bound, relations=relations)
    if all(k == TRUE_CERTIFIED for k in kinds) and v.kind != FALSE_CERTIFIED and not v.certified:
        v = _certified(True, Evidence(f"rule:{rule}", "uniform",
                                      tuple(Instance((i,), True, 1) for i in range(len(kinds))),
                                      "certified premises"))
    return RuleReport(rule, kinds, v, v.kind != TRUE_CERTIFIED)
