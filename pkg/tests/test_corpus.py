from pathlib import Path

import pytest

from peano_workbench.corpus import CORPORA, DATA_DIR, numeral_inequality, render_corpus
from peano_workbench.kernel import check_proof, load_proof
from peano_workbench.notation import print_formula
from peano_workbench.syntax import Eq, Not, numeral


@pytest.mark.parametrize("name", sorted(CORPORA))
def test_bundled_files_match_generator(name):
    expected = render_corpus(name)
    on_disk = {p.name: p.read_text(encoding="utf-8") for p in (DATA_DIR / name).glob("*.proof")}
    assert on_disk == expected


@pytest.mark.parametrize("path", sorted(DATA_DIR.glob("**/*.proof")), ids=lambda p: p.name)
def test_every_bundled_proof_is_accepted(path: Path):
    assert check_proof(load_proof(path), strict_pa=True).accepted


def test_zero_or_successor_goal_text():
    proof = load_proof(DATA_DIR / "corpus" / "zero_or_successor.proof")
    assert print_formula(proof.goal, "sugared") == "(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))"


def test_only_the_contradictory_corpus_uses_hypotheses():
    for path in DATA_DIR.glob("**/*.proof"):
        hyps = check_proof(load_proof(path)).hypotheses
        assert bool(hyps) == (path.name == "all_zero_hypothesis.proof")


def test_numeral_inequality():
    proof = numeral_inequality(2, 5).to_proof()
    assert proof.goal == Not(Eq(numeral(2), numeral(5)))
    assert check_proof(proof, strict_pa=True).accepted
    with pytest.raises(ValueError):
        numeral_inequality(3, 3)
