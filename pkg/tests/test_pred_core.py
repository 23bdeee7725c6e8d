"""Predicate formulas: syntax, scope, substitution, finite models."""

import pytest

from logic1939 import models, preds
from logic1939.errors import (
    BoundClash,
    CaptureError,
    FormulaSyntaxError,
    VariableOverlap,
    WellFormednessError,
)
from logic1939.models import FiniteModel
from logic1939.preds import Atom, Exists, Forall


# ------------------------------------------------------------------ syntax


@pytest.mark.parametrize(
    "text",
    [
        "(x)phi(x) -> phi(y)",
        "(x)(Ey)psi(x,y)",
        "(x)[phi(x) -> (Ey)psi(x,y)]",
        "p -> (x)[p | phi(x)]",
        "~(Ex)phi(x) <-> (x)~phi(x)",
    ],
)
def test_print_parse_roundtrip(text):
    f = preds.parse_pred(text)
    assert preds.parse_pred(preds.print_pred(f)) == f


def test_parse_builds_expected_tree():
    f = preds.parse_pred("(x)(Ey)psi(x, y)")
    assert f == Forall("x", Exists("y", Atom("psi", ("x", "y"))))


def test_brackets_and_parens_are_interchangeable():
    assert preds.parse_pred("(x)[phi(x) -> p]") == preds.parse_pred("(x)(phi(x) -> p)")


def test_arity_must_be_consistent():
    with pytest.raises(WellFormednessError, match="arity 1 and 2"):
        preds.parse_pred("phi(x) & phi(x, y)")


def test_nested_quantifiers_cannot_reuse_a_variable():
    with pytest.raises(WellFormednessError, match="reuse"):
        preds.parse_pred("(x)(x)phi(x)")


def test_free_and_bound_occurrences_must_not_mix():
    with pytest.raises(WellFormednessError, match="both free and bound"):
        preds.parse_pred("phi(x) -> (x)phi(x)")


def test_unclosed_quantifier_body():
    with pytest.raises(FormulaSyntaxError):
        preds.parse_pred("(x)[phi(x)")


# ------------------------------------------------------------------- scope


def test_structural_queries():
    f = preds.parse_pred("p -> (x)(Ey)(phi(x) & psi(x, y))")
    assert preds.functional_arities(f) == {"phi": 1, "psi": 2}
    assert preds.prop_vars(f) == frozenset({"p"})
    assert preds.bound_vars(f) == frozenset({"x", "y"})
    assert preds.free_individual_vars(f) == frozenset()
    assert preds.all_names(f) >= {"p", "x", "y", "phi", "psi"}


def test_scope_report():
    f = preds.parse_pred("(x)(phi(x) -> (Ey)psi(x, y)) & chi(z)")
    report = preds.scope_report(f)
    assert report.free == frozenset({"z"})
    assert report.bound == frozenset({"x", "y"})
    kinds = [(q.var, q.kind, q.path) for q in report.quantifiers]
    assert kinds == [("x", "forall", "l"), ("y", "exists", "l.b.r")]
    assert report.quantifiers[1].scope == Atom("psi", ("x", "y"))


# ------------------------------------------------------------ substitution


def test_rename_bound_is_an_alpha_variant():
    f = preds.parse_pred("(x)(phi(x) -> (Ey)psi(x, y))")
    g = preds.rename_bound(f, "x", "z")
    assert preds.print_pred(g) == "(z)[phi(z) -> (Ey)psi(z,y)]"


def test_rename_bound_refuses_capture():
    f = preds.parse_pred("(x)(phi(x) -> (Ey)psi(x, y))")
    with pytest.raises(CaptureError, match="would capture"):
        preds.rename_bound(f, "x", "y")


def test_subst_free_renames_free_occurrences():
    f = preds.parse_pred("(x)psi(x, y)")
    assert preds.print_pred(preds.subst_free(f, "y", "z")) == "(x)psi(x,z)"


def test_subst_free_refuses_bound_target():
    f = preds.parse_pred("(x)psi(x, y)")
    with pytest.raises(BoundClash):
        preds.subst_free(f, "y", "x")


def test_subst_prop_var():
    f = preds.parse_pred("p -> (x)phi(x)")
    g = preds.subst_prop_var(f, "p", preds.parse_pred("(Ey)chi(y)"))
    assert preds.print_pred(g) == "(Ey)chi(y) -> (x)phi(x)"


def test_subst_prop_var_requires_disjoint_names():
    f = preds.parse_pred("p -> (x)phi(x)")
    with pytest.raises(VariableOverlap):
        preds.subst_prop_var(f, "p", preds.parse_pred("(Ey)phi(y)"))


def test_subst_func_var():
    f = preds.parse_pred("(x)phi(x)")
    g = preds.subst_func_var(f, "phi", ("u",), preds.parse_pred("~psi(u, u)"))
    assert preds.print_pred(g) == "(x)~psi(x,x)"


def test_instantiate_pattern_respects_shadowing():
    f = preds.parse_pred("psi(y, z) -> (x)psi(x, y)")
    g = preds.instantiate_pattern(f, {"y": "w"})
    assert preds.print_pred(g) == "psi(w,z) -> (x)psi(x,w)"


# ------------------------------------------------------------ finite models


def test_evaluate_in_a_concrete_model():
    m = FiniteModel(2, (("phi", frozenset({(0,)})),), ())
    f = preds.parse_pred("(Ex)phi(x)")
    assert models.evaluate(f, m) is True
    g = preds.parse_pred("(x)phi(x)")
    assert models.evaluate(g, m) is False


def test_evaluate_free_variables_via_environment():
    m = FiniteModel(2, (("phi", frozenset({(1,)})),), ())
    f = preds.parse_pred("phi(y)")
    assert models.evaluate(f, m, {"y": 1}) is True
    assert models.evaluate(f, m, {"y": 0}) is False


def test_find_countermodel_for_the_size_two_failure():
    f = preds.parse_pred("(Ex)phi(x) -> (x)phi(x)")
    found = models.find_countermodel(f)
    assert found is not None
    model, env = found
    assert model.size == 2
    assert env == {}
    assert models.evaluate(f, model, env) is False


def test_valid_in_all_small_models():
    f = preds.parse_pred("(x)phi(x) -> (Ex)phi(x)")
    assert models.valid_in_all(f, max_size=3)
    g = preds.parse_pred("(Ex)phi(x) -> (x)phi(x)")
    assert not models.valid_in_all(g, max_size=3)


def test_interpretations_cover_every_relation_assignment():
    f = preds.parse_pred("(x)phi(x)")
    assert len(list(models.interpretations(f, 2))) == 4
