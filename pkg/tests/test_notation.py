import pytest
from hypothesis import given, settings

from generators import formulas, terms
from peano_workbench.notation import ParseError, parse_formula, parse_term, print_formula, print_term
from peano_workbench.syntax import Add, Eq, ForAll, Implies, Mul, Not, Rel, Succ, Var, Zero, numeral

x1, y1 = Var(1), Var.named("y1")


def test_parse_simple_atom():
    assert parse_formula("0=0") == Eq(Zero(), Zero())
    assert parse_formula("x1 != 0'") == Not(Eq(x1, Succ(Zero())))


def test_precedence_and_associativity():
    assert parse_term("x1 + x1 * 0'") == Add(x1, Mul(x1, Succ(Zero())))
    f = parse_formula("0=0 -> 0=0 -> x1=x1")
    assert isinstance(f.consequent, Implies)


def test_quantifier_and_sugar():
    f = parse_formula("(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))")
    assert isinstance(f, ForAll)
    assert print_formula(f, "sugared") == "(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))"
    assert print_formula(f) == "(Ax1)(~(x1 = 0) -> ~(Ay1)~(x1 = y1'))"


def test_unicode_rendering():
    f = parse_formula("(Ax1)~(0 = x1')")
    assert print_formula(f, unicode=True) == "(∀x1)¬(0 = x1′)"


def test_relation_atoms():
    assert parse_formula("H(x1')") == Rel("H", (Succ(x1),))
    assert print_formula(Rel("Halts", (x1, Zero()))) == "Halts(x1, 0)"


def test_pa3_prints_parenthesised():
    assert print_formula(Not(Eq(Zero(), Succ(x1)))) == "~(0 = x1')"


@pytest.mark.parametrize("text, offset", [("0 = ", 4), ("(Ax1", 4), ("0 = 0 )", 6), ("x1 = 0 #", 7)])
def test_parse_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as e:
        parse_formula(text)
    assert e.value.span.start == offset


def test_parse_error_lists_expectations():
    with pytest.raises(ParseError) as e:
        parse_formula("0 = ")
    assert "term" in e.value.expected


def test_numeral_printing():
    assert print_term(numeral(3)) == "0'''"
    assert print_term(Succ(Add(x1, x1))) == "(x1 + x1)'"


@settings(max_examples=300)
@given(terms())
def test_term_round_trip(t):
    assert parse_term(print_term(t)) == t


@settings(max_examples=300)
@given(formulas())
def test_formula_round_trip_both_modes(f):
    assert parse_formula(print_formula(f)) == f
    assert parse_formula(print_formula(f, "sugared")) == f
