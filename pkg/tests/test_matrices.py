"""Many-valued matrices and the independence certificate for axiom A2."""

import pytest

from logic1939 import matrices


def test_bernays_matrix_shape():
    m = matrices.BERNAYS
    assert m == matrices.bernays_matrix()
    assert m.values == (0, 1, 2)
    assert m.designated == frozenset({1})


def test_serialize_parse_roundtrip():
    text = matrices.serialize_matrix(matrices.BERNAYS)
    assert matrices.parse_matrix(text) == matrices.BERNAYS


def test_independence_of_a2():
    report = matrices.independence_report(matrices.BERNAYS, "A2")
    assert report.established
    assert report.kept_tautologies == ("A1", "A3", "A4")
    assert report.kept_failures == ()
    assert report.mp_ok and report.mp_witness is None
    assert report.witness == {"p": 2}
    assert report.witness_value == 2


def test_two_valued_matrix_cannot_separate_a2():
    report = matrices.independence_report(matrices.two_valued(), "A2")
    assert not report.established
    assert report.witness is None


def test_independence_report_other_targets_fail():
    # the Bernays matrix is tailored to A2; the other axioms stay designated
    for target in ("A1", "A3", "A4"):
        report = matrices.independence_report(matrices.BERNAYS, target)
        assert not report.established


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "values"),
        ("values 0 1\ndesignated 1\nnot 0 1", "cover exactly"),
        ("values 0 1\ndesignated 2\nnot 0 1\nnot 1 0\nor 0 0 0\nor 0 1 1\nor 1 0 1\nor 1 1 1", "designated values must be matrix values"),
    ],
)
def test_parse_matrix_rejects_bad_input(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        matrices.parse_matrix(text)
