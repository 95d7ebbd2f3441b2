import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from peano_workbench import cli

DATA = Path(__file__).parent.parent / "src" / "peano_workbench" / "data"


def run(argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv, env or {})
    return code, out.getvalue(), err.getvalue()


def run_json(argv, env=None):
    code, out, _ = run(argv + ["--json"], env)
    return code, json.loads(out)


@pytest.fixture
def files(tmp_path):
    texts = {
        "zero.f": "0 = 0\n",
        "closed_false.f": "# comment line\n(Ax1)(x1 = 0)\n",
        "open.f": "~(0 = x1')\n",
        "bad.f": "0 = \n",
        "rel.f": "R(x1)\n",
        "halting.f": "H(x1)\n",
        "halts.f": "Halts(x1)\n",
        "unknown_rel.f": "Q(x1)\n",
    }
    for name, text in texts.items():
        (tmp_path / name).write_text(text)
    return tmp_path


def test_parse(files):
    code, rep = run_json(["parse", str(files / "open.f")])
    assert code == 0 and rep["command"] == "parse"
    assert rep["payload"]["free_variables"] == ["x1"]
    assert rep["payload"]["closure"] == "(Ax1)~(0 = x1')"
    assert set(rep) == {"command", "config", "payload", "exit_code"}


def test_parse_error_has_offset(files):
    code, rep = run_json(["parse", str(files / "bad.f")])
    # trailing blanks are dropped, so the missing term is reported at end of input
    assert code == 2 and rep["payload"]["span"] == [3, 3] and "offset 3" in rep["payload"]["error"]
    code, out, _ = run(["parse", str(files / "bad.f")])
    assert code == 2 and out.startswith("error at 3..3")


def test_offsets_index_the_file_past_comments(files):
    f = files / "commented.f"
    f.write_text("# header\n0 = ?\n")
    code, rep = run_json(["parse", str(f)])
    assert code == 2 and rep["payload"]["span"][0] == len("# header\n0 = ")


def test_check_exit_codes(files):
    assert run(["check", str(DATA / "corpus" / "zero_or_successor.proof")])[0] == 0
    bad = files / "bad.proof"
    bad.write_text("1 | 0 = 0' | AX:PA1\n")
    code, out, _ = run(["check", str(bad)])
    assert code == 1 and out.startswith("Rejected at line 1")
    assert run(["check", str(files / "missing.proof")])[0] == 2


def test_strict_pa_flag(files):
    proof = DATA / "corpus" / "reflexivity.proof"
    text = proof.read_text()
    if "AX:EQ" in text:
        assert run(["check", str(proof), "--strict-pa"])[0] == 1
    f = files / "eq.proof"
    f.write_text("1 | x1 = x1 | AX:EQ\n")
    assert run(["check", str(f)])[0] == 0
    assert run(["check", str(f), "--strict-pa"])[0] == 1
    assert run(["check", str(f)], {"PAW_STRICT_PA": "1"})[0] == 1


def test_eval(files):
    code, rep = run_json(["eval", str(files / "closed_false.f"), "--bound", "10"])
    assert code == 0
    assert rep["payload"]["verdict"]["kind"] == "FalseCertified"
    assert rep["payload"]["verdict"]["evidence"]["label"] == "counterexample x1=1"
    code, out, _ = run(["eval", str(files / "open.f"), "--bound", "50"])
    assert out.strip() == "(Ax1)~(0 = x1'): TrueCertified"


def test_eval_unknown_relation(files):
    code, rep = run_json(["eval", str(files / "unknown_rel.f")])
    assert code == 2 and "unknown relation" in rep["payload"]["error"]


def test_verify(files):
    code, rep = run_json(["verify", str(files / "rel.f"), "--bound", "4"])
    assert code == 0 and [r["value"] for r in rep["payload"]["rows"]] == [True, False, True, False]
    code, out, _ = run(["verify", str(files / "open.f"), "--bound", "3"])
    assert code == 0 and "polarity=all-true" in out and out.count("TrueCertified") == 3


def test_verify_closed_formula_is_an_input_error(files):
    code, rep = run_json(["verify", str(files / "zero.f")])
    assert code == 2 and rep["payload"]["error"] == "no free variables"


def test_classify(files):
    kinds = {}
    for name in ("rel.f", "halting.f", "halts.f"):
        code, rep = run_json(["classify", str(files / name), "--bound", "8"])
        assert code == 0
        kinds[name] = rep["payload"]["classification"]["kind"]
    assert kinds == {"rel.f": "Computable", "halting.f": "VerifiableOnlyAtBound",
                     "halts.f": "UnknownAtBound"}


def test_algorithmic_mode_from_environment(files):
    code, rep = run_json(["eval", str(files / "halting.f"), "--bound", "4"], {"PAW_MODE": "algorithmic"})
    assert code == 0 and rep["config"]["mode"] == "algorithmic"


def test_scan(files):
    assert run(["scan", str(DATA / "corpus")])[0] == 0
    assert run(["scan", str(DATA / "crafted" / "contradictory")])[0] == 1
    code, out, _ = run(["scan", str(DATA / "crafted" / "omega")])
    assert code == 1 and "omega pattern up to 10" in out
    assert run(["scan", str(DATA / "crafted" / "omega"), "--coverage", "11"])[0] == 0
    assert run(["scan", str(files / "nowhere")])[0] == 2
    assert run(["scan", str(files)])[0] == 2


def test_tm_and_diag():
    code, rep = run_json(["tm", "1", "--budget", "100"])
    assert code == 0 and rep["payload"]["result"]["status"] == "ExceededBudget(100)"
    code, out, _ = run(["tm", "7"])
    assert out.strip() == "machine 7 (busy-beaver-3): Halted(14)"
    assert run(["tm", "99"])[0] == 2
    assert run(["tm", "1", "--input", "2"])[0] == 2
    code, out, _ = run(["diag"])
    assert code == 0 and out.strip() == "d = 1 1 1 1 0 0 0 1"
    assert run(["diag", "--count", "40"])[0] == 2


def test_bad_machine_file(files):
    bad = files / "m.json"
    bad.write_text("[]")
    code, rep = run_json(["tm", "1", "--machines", str(bad)])
    assert code == 2


@pytest.mark.parametrize("env", [{"PAW_BOUND": "0"}, {"PAW_BOUND": "many"},
                                 {"PAW_MODE": "intuitive"}, {"PAW_BUDGET": "-3"}])
def test_invalid_environment(files, env):
    code, out, err = run(["eval", str(files / "zero.f")], env)
    assert code == 2 and out == "" and "environment" in err


def test_environment_defaults_and_flag_precedence(files):
    env = {"PAW_BOUND": "7", "PAW_BUDGET": "99", "PAW_JSON": "yes"}
    code, out, _ = run(["eval", str(files / "zero.f")], env)
    rep = json.loads(out)
    assert rep["config"]["bound"] == 7 and rep["config"]["budget"] == 99
    code, out, _ = run(["eval", str(files / "zero.f"), "--bound", "3"], env)
    assert json.loads(out)["config"]["bound"] == 3


def test_bad_arguments():
    assert run(["eval"])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run(["eval", "x.f", "--bound", "0"])[0] == 2
    assert run(["--help"])[0] == 0


def test_json_is_deterministic(files):
    argv = ["eval", str(files / "open.f"), "--bound", "20", "--json"]
    assert run(argv)[1] == run(argv)[1]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "peano_workbench", "parse", str(files / "zero.f")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("primitive: 0 = 0")
