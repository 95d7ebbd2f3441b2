"""Deterministic Turing machines over the alphabet {0, 1, blank}.

A machine has states ``1..k`` (state 1 is initial) and a total transition
table ``(state, read) -> (next, write, move)`` with ``move`` one of ``L``,
``R`` or ``H``.  Taking an ``H`` transition writes, halts, and counts as a
step.  The tape is two-way infinite and blank outside the input.

Machine files are versioned JSON::

    {"format": "peano-workbench-machines", "version": 1,
     "machines": [{"name": ..., "states": k, "initial": 1,
                   "transitions": [[state, read, next, write, move], ...]}]}

with symbols written ``"0"``, ``"1"`` and ``"_"`` (blank).
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path

BLANK = "_"
SYMBOLS = ("0", "1", BLANK)
MOVES = ("L", "R", "H")
FORMAT = "peano-workbench-machines"
VERSION = 1
BUNDLED_PATH = Path(__file__).parent / "data" / "machines.json"


class MachineSpecError(ValueError):
    pass


@dataclass(frozen=True)
class MachineSpec:
    name: str
    states: int
    transitions: tuple            # sorted (state, read, next, write, move)
    initial: int = 1

    def __post_init__(self):
        if self.states < 1:
            raise MachineSpecError(f"{self.name}: needs at least one state")
        if not 1 <= self.initial <= self.states:
            raise MachineSpecError(f"{self.name}: initial state out of range")
        seen = set()
        for t in self.transitions:
            if len(t) != 5:
                raise MachineSpecError(f"{self.name}: malformed transition {t!r}")
            state, read, nxt, write, move = t
            if not (isinstance(state, int) and 1 <= state <= self.states) or read not in SYMBOLS:
                raise MachineSpecError(f"{self.name}: malformed transition key {(state, read)!r}")
            if not (isinstance(nxt, int) and 1 <= nxt <= self.states):
                raise MachineSpecError(f"{self.name}: bad target state in {t!r}")
            if write not in SYMBOLS or move not in MOVES:
                raise MachineSpecError(f"{self.name}: bad write/move in {t!r}")
            if (state, read) in seen:
                raise MachineSpecError(f"{self.name}: duplicate entry for {(state, read)!r}")
            seen.add((state, read))
        missing = [(q, a) for q in range(1, self.states + 1) for a in SYMBOLS if (q, a) not in seen]
        if missing:
            raise MachineSpecError(f"{self.name}: no transition for {missing[0]!r}")

    @property
    def table(self) -> dict:
        return {(q, a): (n, w, m) for q, a, n, w, m in self.transitions}

    def to_dict(self):
        return {"name": self.name, "states": self.states, "initial": self.initial,
                "transitions": [list(t) for t in self.transitions]}

    @classmethod
    def from_dict(cls, d) -> "MachineSpec":
        try:
            trans = tuple(sorted(tuple(t) for t in d["transitions"]))
            return cls(d["name"], d["states"], trans, d.get("initial", 1))
        except (KeyError, TypeError) as e:
            raise MachineSpecError(f"malformed machine record: {e}") from None


def machine(name: str, states: int, rules: dict, initial: int = 1) -> MachineSpec:
    """Build a spec from ``{(state, read): (next, write, move)}``.

    A read symbol of ``"*"`` fills every symbol not listed for that state; a
    written ``"*"`` writes back the symbol that was read.
    """
    table = {}
    for (q, a), (n, w, mv) in rules.items():
        for s in (SYMBOLS if a == "*" else (a,)):
            if a != "*" or (q, s) not in rules:
                table[(q, s)] = (n, s if w == "*" else w, mv)
    return MachineSpec(name, states, tuple(sorted((q, a, *out) for (q, a), out in table.items())), initial)


@dataclass(frozen=True)
class RunResult:
    halted: bool
    steps: int                    # steps taken (== budget when exceeded)
    budget: int
    head_symbol: str              # symbol under the head when the run stopped
    tape_digest: str

    @property
    def status(self) -> str:
        return f"Halted({self.steps})" if self.halted else f"ExceededBudget({self.budget})"

    @property
    def first_output_bit(self) -> int:
        return 1 if self.head_symbol == "1" else 0

    def to_dict(self):
        return {"status": self.status, "halted": self.halted, "steps": self.steps,
                "budget": self.budget, "head_symbol": self.head_symbol, "tape_digest": self.tape_digest}


def _digest(tape: dict, head: int) -> str:
    cells = sorted((i, a) for i, a in tape.items() if a != BLANK)
    if cells:
        lo, hi = cells[0][0], cells[-1][0]
        text = "".join(tape.get(i, BLANK) for i in range(lo, hi + 1))
    else:
        lo, text = head, ""
    return hashlib.sha256(f"{text}@{head - lo}".encode()).hexdigest()


def run_tm(m: MachineSpec, tape_input: str = "", budget: int = 10_000) -> RunResult:
    """Run ``m`` on ``tape_input`` (head on its first cell) for at most ``budget`` steps."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if any(c not in SYMBOLS for c in tape_input):
        raise ValueError(f"input must be over {SYMBOLS}")
    table = m.table
    tape = {i: c for i, c in enumerate(tape_input) if c != BLANK}
    head, state = 0, m.initial
    for step in range(1, budget + 1):
        nxt, write, move = table[(state, tape.get(head, BLANK))]
        if write == BLANK:
            tape.pop(head, None)
        else:
            tape[head] = write
        if move == "H":
            return RunResult(True, step, budget, tape.get(head, BLANK), _digest(tape, head))
        head += 1 if move == "R" else -1
        state = nxt
    return RunResult(False, budget, budget, tape.get(head, BLANK), _digest(tape, head))


def unary(n: int) -> str:
    return "1" * n


# machine files


def dump_machines(machines) -> str:
    doc = {"format": FORMAT, "version": VERSION, "machines": [m.to_dict() for m in machines]}
    text = json.dumps(doc, indent=1)
    # one transition per line
    text = re.sub(r"\[\s+([^\[\]{}]*?)\s+\]",
                  lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def load_machines(path=None) -> list:
    path = Path(path) if path is not None else BUNDLED_PATH
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise MachineSpecError(f"{path}: {e}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise MachineSpecError(f"{path}: not a machine file")
    if doc.get("version") != VERSION:
        raise MachineSpecError(f"{path}: unsupported version {doc.get('version')!r}")
    records = doc.get("machines")
    if not isinstance(records, list) or not all(isinstance(d, dict) for d in records):
        raise MachineSpecError(f"{path}: 'machines' must be a list of records")
    return [MachineSpec.from_dict(d) for d in records]


# the bundled enumeration


def _counter(width: int) -> MachineSpec:
    """Binary counter over ``width`` bits; halts when the count overflows.

    States 1..width+1 lay down a blank marker and ``width`` zeros, then
    ``inc`` adds one at the right end and ``ret`` walks back to it.
    """
    inc, ret = width + 2, width + 3
    rules = {(1, "*"): (2, BLANK, "R")}
    for q in range(2, width + 2):
        rules[(q, "*")] = (q + 1 if q < width + 1 else ret, "0", "R")
    rules[(inc, "1")] = (inc, "0", "L")
    rules[(inc, "0")] = (ret, "1", "R")
    rules[(inc, BLANK)] = (inc, BLANK, "H")
    rules[(ret, BLANK)] = (inc, BLANK, "L")
    rules[(ret, "*")] = (ret, "*", "R")
    return machine(f"counter-{width}", width + 3, rules)


def _busy_beaver(name: str, rows: list) -> MachineSpec:
    """Two-symbol table ``rows[q] = (on 0, on 1)``; blank reads as 0; ``0`` as next means halt."""
    rules = {}
    for q, pair in enumerate(rows, start=1):
        for a, (write, move, nxt) in zip(("0", "1"), pair):
            out = (nxt or q, write, "H" if nxt == 0 else move)
            rules[(q, a)] = out
            if a == "0":
                rules[(q, BLANK)] = out
    return machine(name, len(rows), rules)


def _halt_writing(sym: str) -> MachineSpec:
    return machine(f"halt-write-{'blank' if sym == BLANK else sym}", 1, {(1, "*"): (1, sym, "H")})


def _scan_right(halt_on: str, write: str) -> MachineSpec:
    """Move right over every symbol except ``halt_on``; on it, write ``write`` and halt."""
    name = f"scan-to-{'blank' if halt_on == BLANK else halt_on}-write-{write}"
    return machine(name, 1, {(1, halt_on): (1, write, "H"), (1, "*"): (1, "*", "R")})


def bundled_catalog() -> list:
    """The bundled enumeration, in order (machine n is entry n-1)."""
    ms = [
        machine("right-mover", 2, {(1, "*"): (2, "1", "R"), (2, "*"): (1, "0", "R")}),
        machine("bouncer", 2, {(1, "*"): (2, "*", "R"), (2, "*"): (1, "*", "L")}),
        machine("halt-on-blank-else-run", 2, {
            (1, BLANK): (1, "0", "H"), (1, "0"): (2, "0", "R"), (1, "1"): (2, "1", "R"),
            (2, "*"): (2, "1", "R")}),
        _halt_writing("0"),
        _halt_writing("1"),
        _busy_beaver("busy-beaver-2", [(("1", "R", 2), ("1", "L", 2)), (("1", "L", 1), ("1", "R", 0))]),
        _busy_beaver("busy-beaver-3", [(("1", "R", 2), ("1", "R", 0)),
                                       (("0", "R", 3), ("1", "R", 2)),
                                       (("1", "L", 3), ("1", "L", 1))]),
        _counter(12),
        _scan_right(BLANK, "1"),
        _scan_right(BLANK, "0"),
        machine("left-mover", 1, {(1, "*"): (1, "1", "L")}),
        _busy_beaver("busy-beaver-4", [(("1", "R", 2), ("1", "L", 2)),
                                       (("1", "L", 1), ("0", "L", 3)),
                                       (("1", "R", 0), ("1", "L", 4)),
                                       (("1", "R", 4), ("0", "R", 1))]),
        machine("erase-then-halt", 2, {(1, "1"): (1, "0", "R"), (1, "0"): (2, "0", "L"),
                                       (1, BLANK): (2, BLANK, "L"), (2, "*"): (2, "*", "H")}),
        machine("flip-forever", 1, {(1, "0"): (1, "1", "R"), (1, "1"): (1, "0", "L"),
                                    (1, BLANK): (1, "1", "L")}),
        machine("halt-on-one-else-run", 1, {(1, "1"): (1, "1", "H"), (1, "0"): (1, "0", "R"),
                                            (1, BLANK): (1, BLANK, "R")}),
        _counter(3),
    ]
    for w in (4, 5, 6, 7, 8, 9, 10, 11, 13):
        ms.append(_counter(w))
    ms += [
        machine("parity-of-input", 3, {(1, "1"): (2, "1", "R"), (1, "0"): (1, "0", "H"),
                                       (1, BLANK): (1, "0", "H"),
                                       (2, "1"): (1, "1", "R"), (2, "0"): (2, "1", "H"),
                                       (2, BLANK): (2, "1", "H"), (3, "*"): (3, "*", "H")}),
        machine("double-step-halt", 2, {(1, "*"): (2, "1", "R"), (2, "*"): (2, "1", "H")}),
        machine("zigzag-forever", 3, {(1, "*"): (2, "1", "R"), (2, "*"): (3, "1", "R"),
                                      (3, "*"): (1, "0", "L")}),
        machine("copy-bit-halt", 2, {(1, "1"): (2, "1", "R"), (1, "0"): (2, "0", "R"),
                                     (1, BLANK): (2, BLANK, "R"), (2, "*"): (2, "*", "H")}),
        machine("halt-after-three", 3, {(1, "*"): (2, "*", "R"), (2, "*"): (3, "*", "R"),
                                        (3, "*"): (3, "1", "H")}),
        machine("run-left-on-one", 2, {(1, "1"): (2, "1", "L"), (1, "0"): (1, "1", "H"),
                                       (1, BLANK): (1, "1", "H"), (2, "*"): (2, "0", "L")}),
        machine("sweep-back-halt", 2, {(1, "1"): (1, "1", "R"), (1, "0"): (2, "0", "L"),
                                       (1, BLANK): (2, BLANK, "L"), (2, "1"): (2, "1", "L"),
                                       (2, "0"): (2, "0", "H"), (2, BLANK): (2, "0", "H")}),
    ]
    return ms


if __name__ == "__main__":
    BUNDLED_PATH.write_text(dump_machines(bundled_catalog()), encoding="utf-8")
