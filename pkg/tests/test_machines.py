import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from oracles import simulate
from peano_workbench.machines import (
    BUNDLED_PATH, MachineSpec, MachineSpecError, bundled_catalog, dump_machines,
    load_machines, machine, run_tm, unary,
)

GOLDEN = json.loads((Path(__file__).parent / "fixtures" / "golden.json").read_text())
CATALOG = load_machines()


def test_immediate_halter():
    m = machine("stop", 1, {(1, "*"): (1, "1", "H")})
    r = run_tm(m, "", 100)
    assert r.status == "Halted(1)" and r.head_symbol == "1" and r.first_output_bit == 1


def test_right_mover_exhausts_budget():
    r = run_tm(CATALOG[0], "", 100)
    assert r.status == "ExceededBudget(100)" and not r.halted and r.steps == 100


def test_busy_beaver_three_takes_fourteen_steps():
    bb3 = next(m for m in CATALOG if m.name == "busy-beaver-3")
    assert run_tm(bb3, "").steps == 14
    assert next(g for g in GOLDEN["blank_runs"] if g["name"] == "busy-beaver-3")["steps"] == 14


def test_catalog_size_and_file():
    assert len(CATALOG) == 32
    assert CATALOG == bundled_catalog()
    assert BUNDLED_PATH.read_text() == dump_machines(bundled_catalog())


@pytest.mark.parametrize("row", GOLDEN["blank_runs"], ids=lambda r: r["name"])
def test_blank_runs_match_golden(row):
    r = run_tm(CATALOG[row["machine"] - 1], "", GOLDEN["budget"])
    assert (r.halted, r.steps, r.head_symbol) == (row["halted"], row["steps"], row["head"])


def test_round_trip(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(dump_machines(CATALOG[:5]))
    assert load_machines(path) == CATALOG[:5]


@pytest.mark.parametrize("record", [
    {"name": "no-states", "states": 0, "transitions": []},
    {"name": "partial", "states": 1, "transitions": [[1, "0", 1, "0", "R"]]},
    {"name": "bad-move", "states": 1, "transitions": [[1, a, 1, a, "X"] for a in "01_"]},
    {"name": "bad-target", "states": 1, "transitions": [[1, a, 2, a, "R"] for a in "01_"]},
    {"name": "bad-symbol", "states": 1, "transitions": [[1, a, 1, "2", "R"] for a in "01_"]},
    {"name": "short", "states": 1, "transitions": [[1, "0"]]},
    {"name": "dup", "states": 1,
     "transitions": [[1, a, 1, a, "R"] for a in "01_"] + [[1, "0", 1, "1", "L"]]},
    {"states": 1, "transitions": []},
])
def test_malformed_specs(record):
    with pytest.raises(MachineSpecError):
        MachineSpec.from_dict(record)


def test_malformed_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(MachineSpecError):
        load_machines(bad)
    bad.write_text("[]")
    with pytest.raises(MachineSpecError, match="not a machine file"):
        load_machines(bad)
    bad.write_text(json.dumps({"format": "peano-workbench-machines", "version": 1, "machines": 3}))
    with pytest.raises(MachineSpecError, match="list of records"):
        load_machines(bad)
    bad.write_text(json.dumps({"format": "other", "version": 1, "machines": []}))
    with pytest.raises(MachineSpecError, match="not a machine file"):
        load_machines(bad)
    bad.write_text(json.dumps({"format": "peano-workbench-machines", "version": 9, "machines": []}))
    with pytest.raises(MachineSpecError, match="version"):
        load_machines(bad)


def test_run_errors():
    with pytest.raises(ValueError):
        run_tm(CATALOG[0], "", 0)
    with pytest.raises(ValueError):
        run_tm(CATALOG[0], "012")


def test_unary():
    assert unary(0) == "" and unary(3) == "111"


inputs = st.text(alphabet="01_", max_size=8)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 31), inputs, st.integers(1, 400))
def test_runs_match_oracle_and_are_deterministic(i, tape, budget):
    m = CATALOG[i]
    r = run_tm(m, tape, budget)
    assert r == run_tm(m, tape, budget)
    assert (r.halted, r.steps, r.head_symbol) == simulate(m.to_dict(), tape, budget)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 31), inputs, st.integers(1, 300), st.integers(0, 300))
def test_budget_monotonicity(i, tape, budget, extra):
    r = run_tm(CATALOG[i], tape, budget)
    if r.halted:
        more = run_tm(CATALOG[i], tape, budget + extra)
        assert (more.status, more.head_symbol, more.tape_digest) == (r.status, r.head_symbol, r.tape_digest)
