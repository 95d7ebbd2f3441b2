"""Demonstration relations for the engine.

* ``R(n)``: digit ``n`` of a computable binary real is 0.  The generator is
  total, so the relation carries a uniform decider.
* ``H(n)``: machine ``n`` of an enumeration halts on the blank tape within
  ``budget_schedule(n)`` steps.  Each instance is decided by one run, but no
  uniform decider is registered.
* ``Halts(n)``: machine ``n`` halts at all.  Only a halt observed within the
  budget gives a verdict; otherwise the instance stays unknown.

``diagonal_d`` is the desk-scale diagonal function: it flips what machine
``n`` does on input ``n`` (written in unary).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .engine import Decision, Evidence, Instance, Relation, RelationDomainError
from .machines import load_machines, run_tm, unary

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class RealDigitSpec:
    generator: Callable             # n -> 0 | 1
    description: str
    total: bool = True              # carries a totality certificate

    def digit(self, n: int) -> int:
        d = self.generator(n)
        if d not in (0, 1):
            raise ValueError(f"{self.description}: digit {n} is {d!r}, not a bit")
        return d


ALL_ZEROS = RealDigitSpec(lambda n: 0, "all zeros")
# digit n is 0 for odd n and 1 for even n: 0101... from digit 1 on
ALTERNATING = RealDigitSpec(lambda n: (n + 1) % 2, "alternating 0101...")


def real_digit_relation(spec: RealDigitSpec, name: str = "R") -> Relation:
    """``name(n)`` holds iff digit ``n`` of the real is 0."""
    def decide(args):
        (n,) = args
        return Decision(spec.digit(n) == 0, 1, f"digit {n} of {spec.description}")
    return Relation(name, 1, decide, spec.total, f"digit n of {spec.description} is 0",
                    f"real-digit:{spec.description}")


def constant_schedule(budget: int) -> Callable:
    if budget < 1:
        raise ValueError("budget must be at least 1")
    return lambda n: budget


def _machine(enumeration, n: int):
    if not 1 <= n <= len(enumeration):
        raise RelationDomainError(f"index {n} out of enumeration range 1..{len(enumeration)}")
    return enumeration[n - 1]


def halting_relation(enumeration, budget_schedule: Callable, name: str = "H") -> Relation:
    """Budgeted halting: decided per instance, never uniformly."""
    def decide(args):
        (n,) = args
        budget = budget_schedule(n)
        r = run_tm(_machine(enumeration, n), "", budget)
        return Decision(r.halted, r.steps, f"machine {n}: {r.status}")
    return Relation(name, 1, decide, False,
                    "machine n halts on the blank tape within its step budget",
                    "run_tm:budgeted")


def halts_ever_relation(enumeration, budget_schedule: Callable, name: str = "Halts") -> Relation:
    """Unbudgeted halting, observed through a budget: non-halting is never concluded."""
    def decide(args):
        (n,) = args
        r = run_tm(_machine(enumeration, n), "", budget_schedule(n))
        if r.halted:
            return Decision(True, r.steps, f"machine {n}: {r.status}")
        return Decision(None, r.steps, f"machine {n}: {r.status}; no verdict")
    return Relation(name, 1, decide, False, "machine n halts on the blank tape",
                    "run_tm:observed")


def default_relations(budget: int = DEFAULT_BUDGET, enumeration=None) -> dict:
    """The relation table used by the command line."""
    machines = enumeration if enumeration is not None else load_machines()
    schedule = constant_schedule(budget)
    rels = [
        real_digit_relation(ALTERNATING, "R"),
        real_digit_relation(ALL_ZEROS, "Z"),
        halting_relation(machines, schedule, "H"),
        halts_ever_relation(machines, schedule, "Halts"),
    ]
    return {r.name: r for r in rels}


def diagonal_d(n: int, enumeration, budget: int = DEFAULT_BUDGET):
    """``d(n)``: 1 if machine n does not halt on input n within budget, else 1 - its output bit."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    m = _machine(enumeration, n)
    r = run_tm(m, unary(n), budget)
    value = 1 - r.first_output_bit if r.halted else 1
    ev = Evidence("diagonal:run_tm", "per-instance", (Instance((n,), value == 1, r.steps),),
                  f"machine {n} ({m.name}) on input {n}: {r.status}, head symbol {r.head_symbol}")
    return value, ev
