import pytest

from peano_workbench import builder as b
from peano_workbench.kernel import AxiomId, check_proof
from peano_workbench.notation import parse_formula as p
from peano_workbench.syntax import Eq, Implies, Not, Var, Zero, numeral

A, B = p("x1 = 0"), p("(Ax2)(x2 = x1)")


@pytest.mark.parametrize("make, goal", [
    (lambda: b.identity(A), Implies(A, A)),
    (lambda: b.double_negation_elim(A), Implies(Not(Not(A)), A)),
    (lambda: b.double_negation_intro(A), Implies(A, Not(Not(A)))),
    (lambda: b.explosion(A, B), Implies(A, Implies(Not(A), B))),
    (lambda: b.contraposition_converse(A, B), Implies(Implies(Not(B), Not(A)), Implies(A, B))),
    (lambda: b.contraposition(A, B), Implies(Implies(A, B), Implies(Not(B), Not(A)))),
    (lambda: b.negated_contraposition(A, B), Implies(Implies(A, Not(B)), Implies(B, Not(A)))),
    (lambda: b.reflexivity(numeral(3)), Eq(numeral(3), numeral(3))),
])
def test_lemmas_check_under_strict_pa(make, goal):
    proof = make().to_proof()
    assert proof.goal == goal
    assert check_proof(proof, strict_pa=True).accepted


def test_axiom_steps_are_validated():
    d = b.Derivation()
    with pytest.raises(b.DerivationError):
        d.axiom(p("0 = 0'"), AxiomId.PA3)


def test_modus_ponens_shape_is_validated():
    d = b.Derivation()
    k = d.include(b.reflexivity(Zero()))
    with pytest.raises(b.DerivationError):
        d.mp(k, k)


def test_undeclared_hypothesis():
    with pytest.raises(b.DerivationError):
        b.Derivation().hyp(A)


def test_discharge_refuses_generalising_a_hypothesis_variable():
    d = b.Derivation([A])
    k = d.hyp(A)
    d.gen(k, Var(1))
    with pytest.raises(b.DerivationError):
        d.discharge(A)


def test_discharge_allows_other_variables():
    d = b.Derivation([A])
    d.gen(d.hyp(A), Var(2))
    proof = d.discharge(A).to_proof()
    assert proof.goal == Implies(A, p("(Ax2)(x1 = 0)"))
    assert check_proof(proof).accepted
