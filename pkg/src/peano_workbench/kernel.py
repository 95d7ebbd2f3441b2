"""Hilbert-style proof kernel for PA.

The kernel recognises instances of the PA axiom schemata PA1-PA9, the five
logical schemata L1-L5 and (unless ``strict_pa``) the reflexivity schema
``t = t``.  It checks proofs line by line under Modus Ponens and
Generalisation.  It never searches: each axiom line names its schema.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path

from .notation import ParseError, parse_formula, print_formula, print_term
from .syntax import (
    Add, Eq, Formula, ForAll, Implies, Mul, Not, Rel, Succ, Term, Var, Zero,
    alpha_equivalent, free_variables, substitute, substitution_is_free,
)


class AxiomId(str, enum.Enum):
    PA1 = "PA1"
    PA2 = "PA2"
    PA3 = "PA3"
    PA4 = "PA4"
    PA5 = "PA5"
    PA6 = "PA6"
    PA7 = "PA7"
    PA8 = "PA8"
    PA9 = "PA9"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    L5 = "L5"
    EQ = "EQ"

    def __str__(self):
        return self.value


PA_AXIOMS = tuple(AxiomId(f"PA{i}") for i in range(1, 10))
LOGICAL_AXIOMS = tuple(AxiomId(f"L{i}") for i in range(1, 6))

X1, X2, X3 = Var(1), Var(2), Var(3)
_S = Succ

# PA1-PA8 as stored formulas; x1..x3 act as schema variables over terms
PA_SCHEMATA = {
    AxiomId.PA1: Implies(Eq(X1, X2), Implies(Eq(X1, X3), Eq(X2, X3))),
    AxiomId.PA2: Implies(Eq(X1, X2), Eq(_S(X1), _S(X2))),
    AxiomId.PA3: Not(Eq(Zero(), _S(X1))),
    AxiomId.PA4: Implies(Eq(_S(X1), _S(X2)), Eq(X1, X2)),
    AxiomId.PA5: Eq(Add(X1, Zero()), X1),
    AxiomId.PA6: Eq(Add(X1, _S(X2)), _S(Add(X1, X2))),
    AxiomId.PA7: Eq(Mul(X1, Zero()), Zero()),
    AxiomId.PA8: Eq(Mul(X1, _S(X2)), Add(Mul(X1, X2), X1)),
}


def induction_instance(g: Formula, x: Var) -> Formula:
    """The PA9 instance ``G(0) -> ((Ax)(G(x) -> G(x')) -> (Ax)G(x))``."""
    return Implies(
        substitute(g, x, Zero()),
        Implies(ForAll(x, Implies(g, substitute(g, x, Succ(x)))), ForAll(x, g)),
    )


def pa_instance(axiom: AxiomId, x1: Term = X1, x2: Term = X2, x3: Term = X3) -> Formula:
    """PA1-PA8 with its schema variables replaced by the given terms."""
    schema = PA_SCHEMATA[AxiomId(axiom)]
    return _instantiate(schema, {X1: x1, X2: x2, X3: x3})


def _instantiate_term(t: Term, b: dict) -> Term:
    if isinstance(t, Var):
        return b.get(t, t)
    if isinstance(t, Zero):
        return t
    if isinstance(t, Succ):
        return Succ(_instantiate_term(t.arg, b))
    return type(t)(_instantiate_term(t.left, b), _instantiate_term(t.right, b))


def _instantiate(f: Formula, b: dict) -> Formula:
    if isinstance(f, Eq):
        return Eq(_instantiate_term(f.left, b), _instantiate_term(f.right, b))
    if isinstance(f, Not):
        return Not(_instantiate(f.body, b))
    return Implies(_instantiate(f.antecedent, b), _instantiate(f.consequent, b))


@dataclass(frozen=True)
class AxiomMatch:
    axiom: AxiomId
    bindings: tuple = ()   # sorted (name, value) pairs

    def binding(self, name):
        return dict(self.bindings)[name]

    def describe(self) -> str:
        if not self.bindings:
            return str(self.axiom)
        parts = []
        for k, v in self.bindings:
            if isinstance(v, Formula):
                parts.append(f"{k} := {print_formula(v, 'sugared')}")
            elif isinstance(v, Var):
                parts.append(f"{k} := {v.name}")
            else:
                parts.append(f"{k} := {print_term(v)}")
        return f"{self.axiom} [{'; '.join(parts)}]"


# matching


def _match_term(pat: Term, t: Term, b: dict) -> bool:
    if isinstance(pat, Var):
        if pat in b:
            return b[pat] == t
        b[pat] = t
        return True
    if type(pat) is not type(t):
        return False
    if isinstance(pat, Zero):
        return True
    if isinstance(pat, Succ):
        return _match_term(pat.arg, t.arg, b)
    return _match_term(pat.left, t.left, b) and _match_term(pat.right, t.right, b)


def _match_qf(pat: Formula, f: Formula, b: dict) -> bool:
    if type(pat) is not type(f):
        return False
    if isinstance(pat, Eq):
        return _match_term(pat.left, f.left, b) and _match_term(pat.right, f.right, b)
    if isinstance(pat, Not):
        return _match_qf(pat.body, f.body, b)
    return _match_qf(pat.antecedent, f.antecedent, b) and _match_qf(pat.consequent, f.consequent, b)


def _match_pa9(f: Formula):
    if not (isinstance(f, Implies) and isinstance(f.consequent, Implies)):
        return None
    base = f.antecedent
    step, concl = f.consequent.antecedent, f.consequent.consequent
    if not (isinstance(step, ForAll) and isinstance(concl, ForAll) and step.var == concl.var):
        return None
    if not isinstance(step.body, Implies):
        return None
    x, g = concl.var, concl.body
    if not alpha_equivalent(step.body.antecedent, g):
        return None
    if not alpha_equivalent(step.body.consequent, substitute(g, x, Succ(x))):
        return None
    if not alpha_equivalent(base, substitute(g, x, Zero())):
        return None
    return AxiomMatch(AxiomId.PA9, (("G", g), ("x", x)))


def matches_schema(f: Formula, axiom: AxiomId):
    """Return an :class:`AxiomMatch` if ``f`` instantiates ``axiom``, else ``None``."""
    axiom = AxiomId(axiom)
    if axiom in PA_SCHEMATA:
        b: dict = {}
        if _match_qf(PA_SCHEMATA[axiom], f, b):
            return AxiomMatch(axiom, tuple(sorted(((k.name, v) for k, v in b.items()))))
        return None
    if axiom is AxiomId.PA9:
        return _match_pa9(f)
    if axiom is AxiomId.EQ:
        if isinstance(f, Eq) and f.left == f.right:
            return AxiomMatch(axiom, (("t", f.left),))
        return None
    return _LOGICAL[axiom](f)


def _l1(f):
    if isinstance(f, Implies) and isinstance(f.consequent, Implies) and f.consequent.consequent == f.antecedent:
        return AxiomMatch(AxiomId.L1, (("A", f.antecedent), ("B", f.consequent.antecedent)))
    return None


def _l2(f):
    # (A -> (B -> C)) -> ((A -> B) -> (A -> C))
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Implies)
            and isinstance(f.antecedent.consequent, Implies) and isinstance(f.consequent, Implies)):
        return None
    a, b, c = f.antecedent.antecedent, f.antecedent.consequent.antecedent, f.antecedent.consequent.consequent
    if f.consequent == Implies(Implies(a, b), Implies(a, c)):
        return AxiomMatch(AxiomId.L2, (("A", a), ("B", b), ("C", c)))
    return None


def _l3(f):
    # (~B -> ~A) -> ((~B -> A) -> B)
    if not (isinstance(f, Implies) and isinstance(f.antecedent, Implies)):
        return None
    nb, na = f.antecedent.antecedent, f.antecedent.consequent
    if not (isinstance(nb, Not) and isinstance(na, Not)):
        return None
    a, b = na.body, nb.body
    if f.consequent == Implies(Implies(nb, a), b):
        return AxiomMatch(AxiomId.L3, (("A", a), ("B", b)))
    return None


def _l4(f):
    # (Ax)A -> A[t/x], t free for x in A
    if not (isinstance(f, Implies) and isinstance(f.antecedent, ForAll)):
        return None
    x, body = f.antecedent.var, f.antecedent.body
    t = instance_term(body, x, f.consequent)
    if t is None:
        return None
    return AxiomMatch(AxiomId.L4, (("A", body), ("t", t), ("x", x)))


def instance_term(body: Formula, x: Var, inst: Formula):
    """Find ``t`` with ``inst == body[t/x]`` and ``t`` free for ``x`` in ``body``."""
    found: dict = {}
    if not _inst(body, inst, x, found, frozenset()):
        return None
    t = found.get("t", x)
    if not substitution_is_free(body, x, t):
        return None
    return t


def _inst_term(p: Term, t: Term, x: Var, found: dict) -> bool:
    if p == x:
        if "t" in found:
            return found["t"] == t
        found["t"] = t
        return True
    if type(p) is not type(t):
        return False
    if isinstance(p, (Var, Zero)):
        return p == t
    if isinstance(p, Succ):
        return _inst_term(p.arg, t.arg, x, found)
    return _inst_term(p.left, t.left, x, found) and _inst_term(p.right, t.right, x, found)


def _inst(p: Formula, f: Formula, x: Var, found: dict, shadowed) -> bool:
    if type(p) is not type(f):
        return False
    if isinstance(p, Eq):
        if x in shadowed:
            return p == f
        return _inst_term(p.left, f.left, x, found) and _inst_term(p.right, f.right, x, found)
    if isinstance(p, Rel):
        if x in shadowed:
            return p == f
        return (p.name == f.name and len(p.args) == len(f.args)
                and all(_inst_term(a, b, x, found) for a, b in zip(p.args, f.args)))
    if isinstance(p, Not):
        return _inst(p.body, f.body, x, found, shadowed)
    if isinstance(p, Implies):
        return (_inst(p.antecedent, f.antecedent, x, found, shadowed)
                and _inst(p.consequent, f.consequent, x, found, shadowed))
    if p.var != f.var:
        return False
    return _inst(p.body, f.body, x, found, shadowed | {p.var})


def _l5(f):
    # (Ax)(A -> B) -> (A -> (Ax)B), x not free in A
    if not (isinstance(f, Implies) and isinstance(f.antecedent, ForAll)
            and isinstance(f.antecedent.body, Implies) and isinstance(f.consequent, Implies)
            and isinstance(f.consequent.consequent, ForAll)):
        return None
    x = f.antecedent.var
    a, b = f.antecedent.body.antecedent, f.antecedent.body.consequent
    if f.consequent.antecedent != a or f.consequent.consequent != ForAll(x, b):
        return None
    if x in free_variables(a):
        return None
    return AxiomMatch(AxiomId.L5, (("A", a), ("B", b), ("x", x)))


_LOGICAL = {AxiomId.L1: _l1, AxiomId.L2: _l2, AxiomId.L3: _l3, AxiomId.L4: _l4, AxiomId.L5: _l5}


def match_pa_axiom(f: Formula) -> list:
    """Every PA schema (PA1-PA9) of which ``f`` is an instance."""
    return [m for m in (matches_schema(f, a) for a in PA_AXIOMS) if m is not None]


def match_logical_axiom(f: Formula) -> list:
    return [m for m in (matches_schema(f, a) for a in LOGICAL_AXIOMS) if m is not None]


def match_axiom(f: Formula, strict_pa: bool = False) -> list:
    found = match_pa_axiom(f) + match_logical_axiom(f)
    if not strict_pa:
        eq = matches_schema(f, AxiomId.EQ)
        if eq:
            found.append(eq)
    return found


# proofs


@dataclass(frozen=True)
class Axiom:
    axiom: AxiomId

    def __str__(self):
        return f"AX:{self.axiom}"


@dataclass(frozen=True)
class ModusPonens:
    """``implication`` holds ``A -> B``; ``antecedent`` holds ``A``."""

    implication: int
    antecedent: int

    def __str__(self):
        return f"MP:{self.implication},{self.antecedent}"


@dataclass(frozen=True)
class Generalisation:
    premise: int
    var: Var

    def __str__(self):
        return f"GEN:{self.premise},{self.var.name}"


@dataclass(frozen=True)
class Hypothesis:
    def __str__(self):
        return "HYP"


@dataclass(frozen=True)
class ProofLine:
    index: int
    formula: Formula
    justification: object


@dataclass(frozen=True)
class Proof:
    lines: tuple
    goal: Formula = None

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        if self.goal is None and self.lines:
            object.__setattr__(self, "goal", self.lines[-1].formula)

    def prefix(self, n: int) -> "Proof":
        return Proof(self.lines[:n])


class ProofFormatError(ValueError):
    """A proof that is structurally unusable (empty, unparseable, bad indices)."""

    def __init__(self, message, line_no=None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class CheckReport:
    accepted: bool
    failing_line: int | None = None
    reason: str | None = None
    resolved: list = field(default_factory=list)   # (index, justification text, detail or None)
    hypotheses: list = field(default_factory=list)
    goal: Formula | None = None

    @property
    def verdict(self) -> str:
        return "Accepted" if self.accepted else "Rejected"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "failing_line": self.failing_line,
            "reason": self.reason,
            "goal": print_formula(self.goal) if self.goal is not None else None,
            "hypotheses": [print_formula(h) for h in self.hypotheses],
            "lines": [{"index": i, "justification": j, "resolved": d} for i, j, d in self.resolved],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _check_line(line: ProofLine, seen: dict, strict_pa: bool):
    """Return (ok, detail) for one line given earlier lines ``seen``."""
    j = line.justification
    f = line.formula
    if isinstance(j, Axiom):
        if j.axiom is AxiomId.EQ and strict_pa:
            return False, "EQ disabled by strict PA mode"
        m = matches_schema(f, j.axiom)
        if m is None:
            return False, f"not an instance of {j.axiom}"
        return True, m.describe()
    if isinstance(j, Hypothesis):
        return True, "hypothesis"
    if isinstance(j, ModusPonens):
        for ref in (j.implication, j.antecedent):
            if ref not in seen or ref >= line.index:
                return False, "dangling reference"
        imp, ant = seen[j.implication], seen[j.antecedent]
        if not isinstance(imp, Implies):
            return False, f"line {j.implication} is not an implication"
        if imp.antecedent != ant:
            return False, f"line {j.antecedent} is not the antecedent of line {j.implication}"
        if imp.consequent != f:
            return False, f"formula is not the consequent of line {j.implication}"
        return True, f"MP from {j.implication} and {j.antecedent}"
    if isinstance(j, Generalisation):
        if j.premise not in seen or j.premise >= line.index:
            return False, "dangling reference"
        if f != ForAll(j.var, seen[j.premise]):
            return False, f"formula is not (A{j.var.name}) of line {j.premise}"
        return True, f"GEN of {j.premise} over {j.var.name}"
    return False, f"unknown justification {j!r}"


def check_proof(proof: Proof, strict_pa: bool = False) -> CheckReport:
    """Check every line; the verdict names the first failing line, if any."""
    if not proof.lines:
        raise ProofFormatError("empty proof")
    seen: dict = {}
    report = CheckReport(accepted=True, goal=proof.goal)
    for line in proof.lines:
        ok, detail = _check_line(line, seen, strict_pa)
        report.resolved.append((line.index, str(line.justification), detail))
        if isinstance(line.justification, Hypothesis):
            report.hypotheses.append(line.formula)
        if not ok and report.accepted:
            report.accepted = False
            report.failing_line = line.index
            report.reason = detail
        seen[line.index] = line.formula
    if report.accepted and proof.lines[-1].formula != proof.goal:
        report.accepted = False
        report.failing_line = proof.lines[-1].index
        report.reason = "last line does not match the goal"
    return report


# proof file format: "<idx> | <formula> | AX:<id> | MP:<i>,<j> | GEN:<i>,<var> | HYP"


def _parse_justification(text: str, line_no: int):
    text = text.strip()
    try:
        if text == "HYP":
            return Hypothesis()
        kind, _, rest = text.partition(":")
        if kind == "AX":
            return Axiom(AxiomId(rest.strip()))
        if kind == "MP":
            i, j = rest.split(",")
            return ModusPonens(int(i), int(j))
        if kind == "GEN":
            i, v = rest.split(",")
            return Generalisation(int(i), Var.named(v.strip()))
    except ValueError:
        pass
    raise ProofFormatError(f"bad justification {text!r}", line_no)


def parse_proof(text: str) -> Proof:
    lines = []
    goal = None
    last_index = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("goal:"):
            try:
                goal = parse_formula(stripped[5:])
            except ParseError as e:
                raise ProofFormatError(f"goal: {e}", line_no) from e
            continue
        first, last = stripped.find("|"), stripped.rfind("|")
        if first < 0 or first == last:
            raise ProofFormatError("expected '<idx> | <formula> | <justification>'", line_no)
        try:
            index = int(stripped[:first])
        except ValueError:
            raise ProofFormatError(f"bad line index {stripped[:first].strip()!r}", line_no) from None
        if index <= last_index:
            raise ProofFormatError("line indices must be strictly increasing", line_no)
        last_index = index
        try:
            formula = parse_formula(stripped[first + 1:last])
        except ParseError as e:
            raise ProofFormatError(str(e), line_no) from e
        lines.append(ProofLine(index, formula, _parse_justification(stripped[last + 1:], line_no)))
    if not lines:
        raise ProofFormatError("empty proof")
    return Proof(tuple(lines), goal)


def format_proof(proof: Proof, header: str = "") -> str:
    out = [f"# {h}" for h in header.splitlines()] if header else []
    out.append(f"goal: {print_formula(proof.goal, 'sugared')}")
    for line in proof.lines:
        out.append(f"{line.index} | {print_formula(line.formula, 'sugared')} | {line.justification}")
    return "\n".join(out) + "\n"


def load_proof(path) -> Proof:
    return parse_proof(Path(path).read_text(encoding="utf-8"))
