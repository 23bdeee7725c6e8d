"""Constructive completeness: synthesized proofs for arbitrary tautologies."""

import pytest

from helpers import enumerate_formulas
from logic1939 import completeness, hilbert, semantics
from logic1939.errors import NotATautology, UnsupportedConnective
from logic1939.props import Not, Var, parse_infix, print_infix


def test_fundamental_literals():
    lits = completeness.fundamental_literals(("p", "q"), (True, False))
    assert lits == (Var("p"), Not(Var("q")))


@pytest.mark.parametrize(
    "text",
    [
        "p -> p",
        "p | ~p",
        "~(p & ~p)",
        "(p -> q) | (q -> p)",
        "(~p | q) | (~q | p)",
        "((p -> q) -> p) -> p",
        "(p <-> q) | (q <-> r) | (p <-> r)",
        "p & q -> (r -> p)",
    ],
)
def test_synthesize_known_tautologies(text):
    f = parse_infix(text)
    proof = completeness.synthesize(f)
    assert hilbert.check_proof(proof) == f


@pytest.mark.parametrize("text", ["p", "p | q", "p -> (q -> r)"])
def test_synthesize_rejects_non_tautologies(text):
    with pytest.raises(NotATautology, match="falsified by"):
        completeness.synthesize(parse_infix(text))


def test_synthesize_rejects_unsupported_connectives():
    with pytest.raises(UnsupportedConnective):
        completeness.synthesize(parse_infix("~(p ^ p)"))


def test_synthesize_every_small_tautology():
    formulas = enumerate_formulas(("p", "q"), 5)
    tautologies = [f for f in formulas if semantics.is_tautology(f)[0]]
    assert len(tautologies) > 50
    for f in tautologies:
        assert hilbert.check_proof(completeness.synthesize(f)) == f


def test_synthesized_proofs_are_self_contained():
    proof = completeness.synthesize(parse_infix("(p -> q) | (q -> p)"))
    for step in proof.steps:
        just = step.just
        refs = [
            r
            for name in ("step", "major", "minor")
            if (r := getattr(just, name, None)) is not None
        ]
        assert all(isinstance(r, int) for r in refs)
    assert print_infix(proof.steps[-1].formula) == "(p -> q) | (q -> p)"
