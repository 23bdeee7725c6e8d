"""Tests for the predicate-calculus kernel, builder and derived rules."""

import pytest

from logic1939 import models, preds
from logic1939.errors import (
    PreconditionViolated,
    ProofError,
    ScriptError,
    SideConditionViolated,
)
from logic1939.pred_kernel import (
    PRED_LIBRARY_SPECS,
    PRED_RULES,
    PredBuilder,
    PredProof,
    PredStep,
    UnivRule,
    apply_pred_definition,
    ax5_formula,
    check_pred_proof,
    expand_derived_pred_rule,
    parse_pred_proof_script,
    pred_theorem_library,
    pthm_1,
    rule_13,
    rule_15,
    rule_i,
    rule_ii,
    rule_iii,
    serialize_pred_proof,
)
from logic1939.preds import Atom, Forall
from logic1939.props import Implies_, Or_
from logic1939.recipes import r_equiv_intro

LIBRARY_CONCLUSIONS = {
    "1": "phi(y) -> (Ex)phi(x)",
    "2": "(x)phi(x) -> (Ex)phi(x)",
    "3": "~(Ex)phi(x) <-> (x)~phi(x)",
    "4": "p & (x)phi(x) <-> (x)[p & phi(x)]",
    "5": "p | (x)phi(x) <-> (x)[p | phi(x)]",
    "6": "(x)[phi(x) -> psi(x)] -> ((x)phi(x) -> (x)psi(x))",
    "10": "~(x)phi(x) <-> (Ex)~phi(x)",
    "10p": "(x)phi(x) | (Ex)~phi(x)",
    "11": "(x)[phi(x) & psi(x)] <-> (x)phi(x) & (x)psi(x)",
    "12": "(x)[phi(x) -> psi(x)] & (x)[psi(x) -> chi(x)] -> (x)[phi(x) -> chi(x)]",
    "13p": "phi(y) -> (Ex)phi(x)",
    "14": "(x)[phi(x) -> psi(x)] -> ((Ex)phi(x) -> (Ex)psi(x))",
    "16": "(Ex)[phi(x) | psi(x)] <-> (Ex)phi(x) | (Ex)psi(x)",
    "exchange": "(y)(x)psi(x,y) <-> (x)(y)psi(x,y)",
    "example1": "phi(y) -> (Ex)phi(x)",
    "example2": "(x)[phi(x) -> psi(x)] -> ((x)phi(x) -> (x)psi(x))",
}


def _phi(v):
    return Atom("phi", (v,))


def _psi(v):
    return Atom("psi", (v,))


# ------------------------------------------------------------ the library


def test_library_names_match_the_spec_table():
    assert {name for name, _, _ in PRED_LIBRARY_SPECS} == set(LIBRARY_CONCLUSIONS)


def test_library_proofs_check_and_conclude_as_frozen():
    lib = pred_theorem_library()
    assert set(lib) == set(LIBRARY_CONCLUSIONS)
    for name, proof in lib.items():
        got = check_pred_proof(proof)
        assert got == preds.parse_pred(LIBRARY_CONCLUSIONS[name]), name


def test_library_conclusions_hold_in_small_models():
    for name, text in LIBRARY_CONCLUSIONS.items():
        assert models.valid_in_all(preds.parse_pred(text), 2), name


def test_serialize_then_parse_reproduces_every_library_proof():
    for name, proof in pred_theorem_library().items():
        script = serialize_pred_proof(proof)
        reparsed = parse_pred_proof_script(script)
        assert check_pred_proof(reparsed) == proof.conclusion, name


# ------------------------------------------------------------ axiom 5


def test_ax5_formula_golden():
    f = ax5_formula("x", _phi("x"), "y")
    assert preds.print_pred(f) == "(x)phi(x) -> phi(y)"


def test_ax5_rejects_a_vacuous_binding():
    with pytest.raises(PreconditionViolated, match="not free in the scope"):
        ax5_formula("x", _phi("y"), "z")


def test_ax5_rejects_instantiating_with_the_bound_variable():
    with pytest.raises(PreconditionViolated, match="must differ"):
        ax5_formula("x", _phi("x"), "x")


def test_ax5_rejects_capture():
    body = preds.parse_pred("psi(x, x) -> (y)psi(y, x)").right.body
    scope = preds.parse_pred("(y)psi(y, x)")
    assert body is not None
    with pytest.raises(PreconditionViolated, match="captured"):
        ax5_formula("x", scope, "y")


# ------------------------------------------------------------ derived rules


def test_rule_i_generalizes_a_theorem():
    b = PredBuilder()
    a = b.axiom_instance("A1", {"p": _phi("x"), "q": _phi("x")})
    i = rule_i(b, a, "x")
    assert preds.print_pred(b.formula(i)) == "(x)[phi(x) -> phi(x) | phi(x)]"
    check_pred_proof(b.proof())


def test_rule_ii_distributes_the_quantifier_over_an_implication():
    b = PredBuilder()
    a = b.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    i = rule_ii(b, a, "x")
    assert preds.print_pred(b.formula(i)) == "(x)phi(x) -> (x)[phi(x) | psi(x)]"
    check_pred_proof(b.proof())


def test_rule_iii_distributes_the_quantifier_over_an_equivalence():
    b = PredBuilder()
    e1 = b.axiom_instance("A3", {"p": _phi("x"), "q": _psi("x")})
    e2 = b.axiom_instance("A3", {"p": _psi("x"), "q": _phi("x")})
    eq = r_equiv_intro(b, e1, e2)
    i = rule_iii(b, eq, "x")
    assert preds.print_pred(b.formula(i)) == "(x)[phi(x) | psi(x)] <-> (x)[psi(x) | phi(x)]"
    check_pred_proof(b.proof())


def test_rule_13_binds_a_variable_free_only_in_the_antecedent():
    b = PredBuilder()
    t = pthm_1(b)
    i = rule_13(b, t, "y")
    assert preds.print_pred(b.formula(i)) == "(Ey)phi(y) -> (Ex)phi(x)"
    check_pred_proof(b.proof())


def test_rule_15_distributes_the_existential_quantifier():
    b = PredBuilder()
    a = b.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    i = rule_15(b, a, "x")
    assert preds.print_pred(b.formula(i)) == "(Ex)phi(x) -> (Ex)[phi(x) | psi(x)]"
    check_pred_proof(b.proof())


def test_expand_derived_pred_rule_matches_the_direct_call():
    b = PredBuilder()
    a = b.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    i = expand_derived_pred_rule(b, "Rule15", [a], "x")
    b2 = PredBuilder()
    a2 = b2.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    j = rule_15(b2, a2, "x")
    assert b.formula(i) == b2.formula(j)


def test_every_catalogued_pred_rule_is_exercised():
    assert set(PRED_RULES) == {"RuleI", "RuleII", "RuleIII", "Rule13", "Rule15"}


def test_expand_derived_pred_rule_rejects_unknown_names():
    b = PredBuilder()
    with pytest.raises(PreconditionViolated, match="unknown derived rule"):
        expand_derived_pred_rule(b, "RuleIV", [], "x")


def test_pred_rules_demand_one_premise():
    b = PredBuilder()
    a = b.axiom_instance("A1")
    with pytest.raises(PreconditionViolated, match="exactly 1 premise"):
        expand_derived_pred_rule(b, "RuleI", [a, a], "x")


# ------------------------------------------------------------ side conditions


def test_builder_univ_rejects_a_variable_free_in_the_antecedent():
    b = PredBuilder()
    a = b.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    with pytest.raises(SideConditionViolated, match="occurs free in the antecedent"):
        b.univ(a, "x")


def test_builder_univ_needs_an_implication():
    b = PredBuilder()
    a = b.axiom_instance("A1")
    o = b.defrw(a, "-", "imp", "expand")
    with pytest.raises(PreconditionViolated, match="needs an implication"):
        b.univ(o, "x")


def test_checker_flags_generalization_of_a_non_implication():
    b = PredBuilder()
    a = b.axiom_instance("A1")
    o = b.defrw(a, "-", "imp", "expand")
    base = b.proof().steps
    bogus = PredStep(preds.parse_pred("(x)phi(x)"), UnivRule(o, "x"))
    with pytest.raises(ProofError, match="needs an implication premise"):
        check_pred_proof(PredProof(base + (bogus,)))


def test_checker_flags_a_free_antecedent_variable():
    b = PredBuilder()
    a = b.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    bad = Implies_(_phi("x"), Forall("x", Or_(_phi("x"), _psi("x"))))
    proof = PredProof(b.proof().steps + (PredStep(bad, UnivRule(a, "x")),))
    with pytest.raises(SideConditionViolated, match="occurs free in the antecedent"):
        check_pred_proof(proof)


# ------------------------------------------------------------ the exists sign


def test_exists_expands_to_the_negated_universal():
    f = preds.parse_pred("(Ex)phi(x)")
    g = apply_pred_definition(f, (), "exists", "expand")
    assert preds.print_pred(g) == "~(x)~phi(x)"
    assert apply_pred_definition(g, (), "exists", "fold") == f


def test_exists_rewrite_rejects_a_bad_direction():
    f = preds.parse_pred("(Ex)phi(x)")
    with pytest.raises(ValueError, match="expand or fold"):
        apply_pred_definition(f, (), "exists", "unfold")


def test_exists_rewrite_rejects_a_non_matching_target():
    f = preds.parse_pred("(x)phi(x)")
    with pytest.raises(ValueError, match="does not match"):
        apply_pred_definition(f, (), "exists", "expand")


# ------------------------------------------------------------ proof scripts


def test_script_rejects_a_wrong_declared_formula():
    script = "1: phi(y) -> (Ex)phi(x) ; ax5 {phi := phi(x), x := x, y := y}\n"
    with pytest.raises(ScriptError, match="declared formula differs"):
        parse_pred_proof_script(script)


def test_script_rejects_out_of_order_steps():
    script = "2: (x)phi(x) -> phi(y) ; ax5 {phi := phi(x), x := x, y := y}\n"
    with pytest.raises(ScriptError, match="numbered in order"):
        parse_pred_proof_script(script)


def test_script_ax5_demands_its_three_entries():
    script = "1: (x)phi(x) -> phi(y) ; ax5 {phi := phi(x), x := x}\n"
    with pytest.raises(ScriptError, match="phi, x and y"):
        parse_pred_proof_script(script)


def test_script_use_line_runs_a_quantifier_rule():
    script = (
        "1: phi(x) -> phi(x) | psi(x) ; pax A1 {p := phi(x), q := psi(x)}\n"
        "2: (Ex)phi(x) -> (Ex)[phi(x) | psi(x)] ; use Rule15 1 x\n"
    )
    proof = parse_pred_proof_script(script)
    got = check_pred_proof(proof)
    assert got == preds.parse_pred("(Ex)phi(x) -> (Ex)[phi(x) | psi(x)]")
