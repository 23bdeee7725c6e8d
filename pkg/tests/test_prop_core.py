"""Propositional formula trees: parsing, printing, substitution, rewriting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import ALL_BINARY
from logic1939 import props, rewrite
from logic1939.errors import AmbiguityError, FormulaSyntaxError
from logic1939.props import And_, Equiv_, Implies_, Not, Or_, Var


def formulas(names=("p", "q", "r"), max_leaves=5):
    leaf = st.builds(Var, st.sampled_from(names))
    return st.recursive(
        leaf,
        lambda kids: st.one_of(
            kids.map(Not),
            st.builds(lambda c, a, b: c(a, b), st.sampled_from(ALL_BINARY), kids, kids),
        ),
        max_leaves=max_leaves,
    )


# ------------------------------------------------------------------ parsing


def test_precedence_negation_binds_tightest():
    assert props.parse_infix("~p & q") == And_(Not(Var("p")), Var("q"))


def test_precedence_and_over_or():
    assert props.parse_infix("p | q & r") == Or_(Var("p"), And_(Var("q"), Var("r")))


def test_precedence_or_over_implication():
    assert props.parse_infix("p -> q | r") == Implies_(Var("p"), Or_(Var("q"), Var("r")))


def test_conjunction_associates_left():
    f = props.parse_infix("p & q & r")
    assert f == And_(And_(Var("p"), Var("q")), Var("r"))


@pytest.mark.parametrize("text", ["p -> q -> r", "p <-> q <-> r", "p -> q <-> r"])
def test_equal_force_connectives_must_be_parenthesized(text):
    with pytest.raises(AmbiguityError):
        props.parse_infix(text)


def test_parenthesized_chains_parse():
    assert props.parse_infix("p -> (q -> r)") == Implies_(
        Var("p"), Implies_(Var("q"), Var("r"))
    )


@pytest.mark.parametrize(
    "text,position",
    [("", 0), ("p &", 3), ("(p", 2), ("p q", 2), ("p @ q", 2)],
)
def test_syntax_errors_carry_positions(text, position):
    with pytest.raises(FormulaSyntaxError, match=f"position {position}"):
        props.parse_infix(text)


@settings(max_examples=300)
@given(formulas())
def test_infix_print_parse_roundtrip(f):
    assert props.parse_infix(props.print_infix(f)) == f


@settings(max_examples=300)
@given(formulas())
def test_full_mode_roundtrip(f):
    assert props.parse_infix(props.print_infix(f, mode="full")) == f


def test_minimal_printing_drops_redundant_parens():
    f = props.parse_infix("(p -> (q | (r & s)))")
    assert props.print_infix(f) == "p -> q | r & s"


# ------------------------------------------------------------------ polish


def test_polish_notation_golden():
    f = props.parse_infix("(~p -> q & r | s) <-> t")
    assert props.print_polish(f) == "ECNpAKqrst"


@settings(max_examples=300)
@given(formulas())
def test_polish_roundtrip(f):
    assert props.parse_polish(props.print_polish(f)) == f


# ------------------------------------------------------- structural helpers


def test_variables_in_first_occurrence_order():
    assert props.variables(props.parse_infix("q & p | q & r")) == ("q", "p", "r")


def test_size_counts_all_nodes():
    assert props.size(props.parse_infix("~p -> q")) == 4


def test_connectives_collects_distinct_operators():
    f = props.parse_infix("~p -> (q & q -> p)")
    assert props.connectives(f) == {
        "~",
        props.Connective.IMPLIES,
        props.Connective.AND,
    }


def test_substitution_is_simultaneous():
    f = props.parse_infix("p -> q")
    swapped = props.substitute(f, {"p": Var("q"), "q": Var("p")})
    assert swapped == props.parse_infix("q -> p")


def test_substitution_leaves_unmapped_variables():
    f = props.parse_infix("p -> q")
    assert props.substitute(f, {"p": Var("r")}) == props.parse_infix("r -> q")


# ----------------------------------------------------------------- rewrite


def test_definition_rules_cover_defined_connectives():
    assert set(rewrite.DEF_RULES) == {"imp", "equiv", "and"}


def test_expand_implication():
    f = props.parse_infix("p -> q")
    assert rewrite.expand_definition(f, "imp") == props.parse_infix("~p | q")


def test_expand_conjunction():
    f = props.parse_infix("p & q")
    assert rewrite.expand_definition(f, "and") == props.parse_infix("~(~p | ~q)")


def test_fold_undoes_expand_at_root():
    for text, rule in [("p -> q", "imp"), ("p & q", "and"), ("p <-> q", "equiv")]:
        f = props.parse_infix(text)
        assert rewrite.fold_definition(rewrite.expand_definition(f, rule), rule) == f


def test_fold_returns_none_on_shape_mismatch():
    assert rewrite.fold_definition(props.parse_infix("p | q"), "imp") is None


def test_path_parsing_roundtrip():
    assert rewrite.parse_path("-") == ()
    assert rewrite.format_path(()) == "-"
    for text in ("l", "r", "l.r", "s", "r.l.l"):
        assert rewrite.format_path(rewrite.parse_path(text)) == text
    with pytest.raises(ValueError):
        rewrite.parse_path("x")


def test_subterm_and_replace():
    f = props.parse_infix("~p -> (q | r)")
    assert rewrite.subterm_at(f, rewrite.parse_path("l")) == Not(Var("p"))
    assert rewrite.subterm_at(f, rewrite.parse_path("l.s")) == Var("p")
    g = rewrite.replace_at(f, rewrite.parse_path("r.l"), Var("s"))
    assert g == props.parse_infix("~p -> (s | r)")


def test_apply_definition_at_inner_path():
    f = props.parse_infix("~(p -> q) | r")
    g = rewrite.apply_definition(f, rewrite.parse_path("l.s"), "imp", "expand")
    assert g == props.parse_infix("~(~p | q) | r")
    assert rewrite.apply_definition(g, rewrite.parse_path("l.s"), "imp", "fold") == f


def test_apply_definition_rejects_mismatch():
    with pytest.raises(ValueError):
        rewrite.apply_definition(props.parse_infix("p | q"), (), "imp", "fold")


@settings(max_examples=200)
@given(formulas())
def test_replace_at_root_is_identity_swap(f):
    assert rewrite.replace_at(f, (), Var("z")) == Var("z")
    assert rewrite.subterm_at(f, ()) == f
