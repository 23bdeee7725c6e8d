"""Truth tables, tautology decision, definability closure, normal forms."""

import random

import pytest
from hypothesis import given, settings

from helpers import random_formula, tables_agree
from test_prop_core import formulas
from logic1939 import props, semantics
from logic1939.errors import ResourceLimit
from logic1939.props import Not, Var


# ------------------------------------------------------------- truth tables


def test_assignments_enumerate_true_first():
    assert list(semantics.assignments(("p", "q"))) == [
        {"p": True, "q": True},
        {"p": True, "q": False},
        {"p": False, "q": True},
        {"p": False, "q": False},
    ]


def test_truth_table_of_implication():
    t = semantics.truth_table(props.parse_infix("p -> q"))
    assert t.variables == ("p", "q")
    assert t.rows == (True, False, True, True)


def test_truth_table_respects_variable_order():
    t = semantics.truth_table(props.parse_infix("p -> q"), variable_order=("q", "p"))
    assert t.variables == ("q", "p")
    assert t.rows == (True, True, False, True)


def test_serialize_table_golden():
    t = semantics.truth_table(props.parse_infix("p -> q"))
    assert semantics.serialize_table(t) == "p q\nTT | T\nTF | F\nFT | T\nFF | T"


def test_truth_table_var_cap():
    f = props.parse_infix("p | q | r | s")
    with pytest.raises(ResourceLimit):
        semantics.truth_table(f, var_cap=3)


def test_is_tautology_accepts_excluded_middle():
    ok, counterexample = semantics.is_tautology(props.parse_infix("p | ~p"))
    assert ok and counterexample is None


def test_is_tautology_counterexample_falsifies():
    f = props.parse_infix("(p -> q) -> (q -> p)")
    ok, counterexample = semantics.is_tautology(f)
    assert not ok
    assert semantics.evaluate(f, counterexample) is False


@pytest.mark.parametrize(
    "text,value",
    [
        ("p ^ q", True),
        ("p / q", True),
        ("p & ~~q", False),
        ("p <-> ~q", True),
    ],
)
def test_evaluate_extended_connectives(text, value):
    a = {"p": True, "q": False}
    assert semantics.evaluate(props.parse_infix(text), a) is value


# ----------------------------------------------------------- table -> DNF


def test_fundamental_conjunction_golden():
    f = semantics.fundamental_conjunction(("p", "q"), (True, False))
    assert props.print_infix(f) == "p & ~q"


@settings(max_examples=200)
@given(formulas())
def test_table_to_dnf_is_right_inverse(f):
    d = semantics.table_to_dnf(semantics.truth_table(f))
    if not d.empty:
        assert tables_agree(d.formula, f)


def test_table_to_dnf_contradiction_flagged():
    d = semantics.table_to_dnf(semantics.truth_table(props.parse_infix("p & ~p")))
    assert d.empty
    assert d.formula == props.parse_infix("p & ~p")


# ------------------------------------------------------ definability closure


def test_closure_of_negation_and_equivalence_is_the_even_functions():
    closure = semantics.definability_closure(("~", "<->"), 2)
    assert len(closure) == 8
    assert all(semantics.is_even_function(g) for g in closure)


def test_sheffer_stroke_is_functionally_complete_at_arity_two():
    assert len(semantics.definability_closure(("/",), 2)) == 16


def test_positive_basis_cannot_define_negation():
    closure = semantics.definability_closure(("&", "|", "->"), 1)
    negation = (False, True)
    assert negation not in closure


def test_closure_word_aliases_match_symbols():
    a = semantics.definability_closure(("not", "equiv"), 2)
    assert a == semantics.definability_closure(("~", "<->"), 2)


def test_single_negation_closure_at_arity_one():
    assert semantics.definability_closure(("~",), 1) == frozenset(
        {(True, False), (False, True)}
    )


def test_disjunction_is_not_even():
    table = tuple(a or b for a in (True, False) for b in (True, False))
    assert not semantics.is_even_function(table)


@pytest.mark.parametrize("arity", [0, 5])
def test_closure_arity_bounds(arity):
    with pytest.raises(ValueError):
        semantics.definability_closure(("~",), arity)


# -------------------------------------------------------------- normal forms


def test_dnf_worked_example():
    f = props.parse_infix("(p -> q) -> (~q -> ~p)")
    assert props.print_infix(semantics.to_dnf(f)) == "p & ~q | q | ~p"


def test_cnf_worked_example():
    f = props.parse_infix("(p -> q) -> (~q -> ~p)")
    assert props.print_infix(semantics.to_cnf(f)) == "(p | ~p | q) & (~p | q | ~q)"


def test_literal_is_its_own_normal_forms():
    p = props.parse_infix("p")
    assert semantics.to_dnf(p) == p
    assert semantics.to_cnf(p) == p


def _is_literal(f):
    return isinstance(f, Var) or (isinstance(f, Not) and isinstance(f.sub, Var))


def _conjunction_of_literals(f):
    while isinstance(f, props.Bin) and f.conn is props.Connective.AND:
        if not _is_literal(f.right):
            return False
        f = f.left
    return _is_literal(f)


def _disjunction_of(f, inner):
    while isinstance(f, props.Bin) and f.conn is props.Connective.OR:
        if not inner(f.right):
            return False
        f = f.left
    return inner(f)


def test_normal_forms_preserve_truth_tables():
    rng = random.Random(424242)
    for _ in range(400):
        f = random_formula(rng, names=("p", "q", "r", "s"), leaves=5)
        d = semantics.to_dnf(f)
        c = semantics.to_cnf(f)
        assert tables_agree(d, f)
        assert tables_agree(c, f)
        assert _disjunction_of(d, _conjunction_of_literals)


def test_dnf_node_cap():
    f = props.parse_infix("(p <-> q) <-> (r <-> (s <-> t))")
    with pytest.raises(ResourceLimit):
        semantics.to_dnf(f, node_cap=40)
