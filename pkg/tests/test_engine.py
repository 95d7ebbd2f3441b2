import random

import pytest
from hypothesis import given, settings, strategies as st

from generators import formula, terms
from oracles import brute_truth, py_value
from peano_workbench import engine
from peano_workbench.engine import (
    FALSE_CERTIFIED, TRUE_CERTIFIED, UNKNOWN, VERIFIED_UP_TO, Assignment, Decider, EngineError,
    NotFound, SatisfactionMethod, check_axiom_truth, check_rule_preservation, classify,
    decide_atom, eval_term, satisfies, synthesize_uniform_decider, truth, verify_up_to,
)
from peano_workbench.evidence import default_relations, halting_relation, constant_schedule
from peano_workbench.kernel import AxiomId, pa_instance
from peano_workbench.machines import machine
from peano_workbench.notation import parse_formula as p
from peano_workbench.syntax import (
    Add, Eq, Mul, Succ, Var, Zero, free_variables, is_closed, mk_numeral, universal_closure,
)

x1 = Var(1)
RELS = default_relations(1000)


def test_assignment_lookup_and_variants():
    s = Assignment.of({x1: 4}, default=7)
    assert s(1) == 4 and s(99) == 7
    t = s.variant(Var(2), 0)
    assert t(2) == 0 and s(2) == 7
    with pytest.raises(EngineError):
        Assignment.of({0: 1})


def test_eval_term_examples():
    assert eval_term(Succ(Zero())) == 1
    assert eval_term(Add(mk_numeral(2).term, mk_numeral(3).term)) == 5
    assert eval_term(Mul(x1, Succ(x1)), Assignment.of({1: 6})) == 42


def test_eval_term_bignum():
    t = Mul(x1, x1)
    assert eval_term(t, Assignment.of({1: 10 ** 30})) == 10 ** 60


def test_decide_atom_examples():
    assert decide_atom(p("0 = 0"))[0] is True
    assert decide_atom(p("0 = 0'"))[0] is False
    f = Eq(Mul(mk_numeral(3).term, mk_numeral(4).term), mk_numeral(12).term)
    value, ev = decide_atom(f)
    assert value and ev.instances[0].inputs == (12, 12) and ev.instances[0].steps > 0


def test_decide_atom_rejects_non_atoms():
    with pytest.raises(EngineError):
        decide_atom(p("~(0 = 0)"))


@pytest.mark.parametrize("text, bound, kind", [
    ("(Ax1)(x1 = x1)", 10, TRUE_CERTIFIED),
    ("(Ax1)(x1 = 0)", 10, FALSE_CERTIFIED),
    ("(Ax1)~(0 = x1')", 50, TRUE_CERTIFIED),
    ("(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))", 20, VERIFIED_UP_TO),
    ("(Ex1)(x1 * x1 = 0'''')", 8, TRUE_CERTIFIED),
    ("(Ax1)((Ax2)(x1 + x2 = x2 + x1))", 6, TRUE_CERTIFIED),
])
def test_satisfies_examples(text, bound, kind):
    assert satisfies(p(text), bound=bound).kind == kind


def test_counterexample_is_recorded():
    v = satisfies(p("(Ax1)(x1 = 0)"), bound=10)
    assert v.evidence.label == "counterexample x1=1"
    assert satisfies(p("(Ex1)(x1 = 0'')"), bound=10).evidence.label.startswith("witness")


def test_empty_bound_is_an_error():
    with pytest.raises(EngineError, match="empty enumeration bound"):
        satisfies(p("0 = 0"), bound=0)


def test_bounded_quantifier_is_decided_exactly():
    # every x1 <= 3 satisfies x1 * x1 <= 9 style property; here: x1 < 5 -> ~(x1 = 7)
    f = p("(Ax1)((Ez1)(x1 + z1' = 0''''') -> ~(x1 = 0'''''''))")
    d = synthesize_uniform_decider(f)
    assert isinstance(d, Decider) and "bounded" in d.description
    assert satisfies(f, bound=3).kind == TRUE_CERTIFIED


def test_bounded_decider_finds_false_instances():
    f = p("(Ax1)((Ez1)(x1 + z1 = x2) -> ~(x1 = 0'''))")
    d = synthesize_uniform_decider(f)
    assert isinstance(d, Decider)
    assert d(Assignment.of({2: 2})) is True
    assert d(Assignment.of({2: 3})) is False


def test_synthesis_examples():
    assert isinstance(synthesize_uniform_decider(p("x1 = x1")), Decider)
    assert isinstance(synthesize_uniform_decider(universal_closure(pa_instance(AxiomId.PA6))), Decider)
    nf = synthesize_uniform_decider(p("H(x1)"), RELS)
    assert isinstance(nf, NotFound) and nf.reason == "unbounded search subformula"
    nf = synthesize_uniform_decider(p("(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))"))
    assert isinstance(nf, NotFound) and nf.reason == "unbounded quantifier"


def test_unknown_relation():
    with pytest.raises(EngineError, match="unknown relation"):
        satisfies(p("Q(0)"), relations=RELS)


def test_relation_out_of_range_is_unknown():
    assert satisfies(p("H(0)"), relations=RELS).kind == UNKNOWN


def test_algorithmic_mode_demands_uniform_evidence():
    s = Assignment.of({1: 4})
    assert satisfies(p("H(x1)"), s, relations=RELS).kind == TRUE_CERTIFIED
    v = satisfies(p("H(x1)"), s, relations=RELS, mode="algorithmic")
    assert v.kind == VERIFIED_UP_TO and v.value is True
    assert satisfies(p("R(x1)"), s, relations=RELS, mode="algorithmic").kind == FALSE_CERTIFIED
    with pytest.raises(EngineError):
        satisfies(p("0 = 0"), mode="intuitive")


def test_verify_up_to_examples():
    t = verify_up_to(p("x1 = x1"), 5)
    assert [r.value for r in t.rows] == [True] * 5
    t = verify_up_to(p("~(0 = x1')"), 5)
    assert [r.inputs for r in t.rows] == [(1,), (2,), (3,), (4,), (5,)]
    assert t.polarity == "all-true"
    t = verify_up_to(p("R(x1)"), 4, RELS)
    assert [r.value for r in t.rows] == [True, False, True, False]


def test_verify_grid_for_several_variables():
    t = verify_up_to(p("x1 + x2 = x2 + x1"), 2)
    assert len(t.rows) == 9 and t.rows[0].inputs == (0, 0)


def test_verify_errors():
    with pytest.raises(EngineError, match="no free variables"):
        verify_up_to(p("0 = 0"), 5)
    with pytest.raises(EngineError):
        verify_up_to(p("x1 = 0"), 0)


def test_classify_examples():
    assert classify(universal_closure(pa_instance(AxiomId.PA5))).kind == engine.COMPUTABLE
    assert classify(p("H(x1)"), 25, default_relations(10_000)).kind == engine.VERIFIABLE_ONLY
    assert classify(p("Halts(x1)"), 8, RELS).kind == engine.UNKNOWN_AT_BOUND


@pytest.mark.parametrize("ax", [f"PA{i}" for i in range(1, 9)])
def test_axiom_truth_pa1_to_pa8(ax):
    v = check_axiom_truth(ax, bound=100)
    assert v.kind == TRUE_CERTIFIED and v.evidence.method == "uniform"


def test_axiom_truth_with_instantiation():
    assert check_axiom_truth("PA3", 10, terms=(p("x1 = x1 * x2").right,)).kind == TRUE_CERTIFIED


@pytest.mark.parametrize("g, case", [("x1 = x1", "case (c)"), ("x1 = 0", "case (b)"),
                                     ("~(0 = x1')", "case (c)"), ("~(x1 = x1)", "case (a)")])
def test_induction_cases(g, case):
    v = check_axiom_truth("PA9", 20, g=p(g))
    assert v.kind == TRUE_CERTIFIED and v.evidence.label == case


def test_induction_degrades_without_certificates():
    v = check_axiom_truth("PA9", 12, g=p("(Ey1)(x1 = y1 + y1) | (Ey1)(x1 = (y1 + y1)')"))
    assert v.kind == VERIFIED_UP_TO and v.value is True
    assert v.evidence.label == "undetermined case"


def test_induction_needs_a_formula():
    with pytest.raises(EngineError):
        check_axiom_truth("PA9", 5)
    with pytest.raises(EngineError):
        check_axiom_truth("L1", 5)


def test_rule_preservation_examples():
    rep = check_rule_preservation("GEN", [p("x1 = x1")], p("(Ax1)(x1 = x1)"), bound=10)
    assert rep.conclusion.kind == TRUE_CERTIFIED and not rep.degraded
    rep = check_rule_preservation("MP", [p("0 = 0"), p("0 = 0 -> 0' = 0'")], p("0' = 0'"), bound=10)
    assert not rep.degraded


def test_gen_over_a_bounded_premise_is_flagged():
    halters = [machine(f"halt-{i}", 1, {(1, "*"): (1, "1", "H")}) for i in range(60)]
    rels = {"H": halting_relation(halters, constant_schedule(100))}
    premise = p("~(x1 = 0) -> H(x1)")
    rep = check_rule_preservation("GEN", [premise], p("(Ax1)(~(x1 = 0) -> H(x1))"), bound=50,
                                  relations=rels)
    assert rep.premise_kinds == (VERIFIED_UP_TO,)
    assert rep.conclusion.kind == VERIFIED_UP_TO and rep.conclusion.bound == 50
    assert rep.degraded


def test_rule_shape_mismatch():
    with pytest.raises(EngineError, match="shape"):
        check_rule_preservation("MP", [p("0 = 0"), p("0 = 0 -> 0' = 0'")], p("0 = 0'"))
    with pytest.raises(EngineError, match="shape"):
        check_rule_preservation("GEN", [p("0 = 0")], p("(Ax1)(x1 = x1)"))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 64), st.integers(0, 2 ** 64), st.integers(0, 50))
def test_closed_formulas_ignore_the_assignment(a, b, default):
    f = p("(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))")
    s = Assignment.of({1: a, 2: b}, default)
    assert satisfies(f, s, bound=6) == satisfies(f, Assignment(), bound=6)


def test_closed_generated_formulas_ignore_100_assignments():
    rng = random.Random(21)
    for _ in range(20):
        f = universal_closure(formula(rng, depth=2, ceiling=5, size=4))
        assert is_closed(f)
        ref = satisfies(f, Assignment(), bound=5)
        for _ in range(100):
            s = Assignment.of({i: rng.randint(0, 10 ** 6) for i in (1, 2, 3, 1_000_001)},
                              rng.randint(0, 9))
            assert satisfies(f, s, bound=5) == ref


def test_witness_labels_do_not_change_verdicts():
    rng = random.Random(22)
    other = SatisfactionMethod(witness_label="another witness")
    for _ in range(100):
        f = formula(rng, depth=2, ceiling=5, size=4)
        env = Assignment.of({v: rng.randint(0, 5) for v in free_variables(f)})
        assert satisfies(f, env, 5) == satisfies(f, env, 5, sm=other)


def test_certified_implies_verified():
    rng = random.Random(23)
    checked = 0
    while checked < 40:
        f = formula(rng, depth=1, ceiling=4, size=3)
        if not free_variables(f) or classify(f, 4).kind != engine.COMPUTABLE:
            continue
        d = synthesize_uniform_decider(f)
        table = verify_up_to(f, 4)
        xs = sorted(free_variables(f), key=lambda v: v.index)
        for row in table.rows:
            assert row.value == d(Assignment.of(dict(zip(xs, row.inputs))))
        checked += 1


@settings(max_examples=300, deadline=None)
@given(terms(), terms(), st.dictionaries(st.sampled_from([1, 2, 3, 1_000_001]), st.integers(0, 50)))
def test_decide_atom_matches_python(a, b, env):
    s = Assignment.of(env)
    full = {i: s(i) for i in (1, 2, 3, 1_000_001)}
    assert decide_atom(Eq(a, b), s)[0] == (py_value(a, full) == py_value(b, full))


def test_oracle_agreement_on_small_formulas():
    rng = random.Random(24)
    for _ in range(300):
        f = formula(rng, depth=2, ceiling=4, size=4)
        env = {v.index: rng.randint(0, 4) for v in free_variables(f)}
        assert satisfies(f, Assignment.of(env), bound=4).value == brute_truth(f, env, 4)


def test_verdict_json_shape():
    d = truth(p("(Ax1)(x1 = 0 | (Ey1)(x1 = y1'))"), bound=4).to_dict()
    assert set(d) == {"kind", "value", "bound", "polarity", "evidence"}
    assert len(d["evidence"]["trace_digest"]) == 64
