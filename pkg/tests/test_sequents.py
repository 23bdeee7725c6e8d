"""Sequent kernel: the five rules, scripts, and truth-table soundness."""

import random
from pathlib import Path

import pytest

from logic1939 import props, sequents
from logic1939.errors import ProofError, ScriptError
from logic1939.props import Implies_, Not, Var
from logic1939.sequents import (
    SeqAdd,
    SeqAxiom,
    SeqExport,
    SeqImply,
    SeqRaa,
    Sequent,
    SequentProof,
    SequentStep,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


# ------------------------------------------------------------------ parsing


def test_parse_sequent_roundtrip():
    s = sequents.parse_sequent("p, ~p |- q")
    assert sequents.serialize_sequent(s) == "p, ~p |- q"


def test_rules_compare_contexts_not_premise_lists():
    a = sequents.parse_sequent("q, p |- r")
    b = sequents.parse_sequent("p, q, p |- r")
    assert a.premises != b.premises
    assert a.context == b.context


def test_empty_premises():
    s = sequents.parse_sequent("|- p -> p")
    assert s.premises == ()
    assert sequents.serialize_sequent(s) == "|- p -> p"


def test_sequent_language_is_negation_and_implication():
    with pytest.raises(ScriptError, match="only ~ and ->"):
        sequents.parse_sequent("p & q |- p")


# -------------------------------------------------------------------- rules


def _check(script):
    return sequents.check_sequent_proof(sequents.parse_sequent_script(script))


def test_pseudo_paradox_of_the_true_consequent():
    conclusion = _check((CORPUS / "seq" / "01-true-consequent.sproof").read_text())
    assert sequents.serialize_sequent(conclusion) == "q |- p -> q"


def test_pseudo_paradox_of_the_false_antecedent():
    conclusion = _check((CORPUS / "seq" / "02-false-antecedent.sproof").read_text())
    assert sequents.serialize_sequent(conclusion) == "~p |- p -> q"


def test_ex_falso_sequent():
    conclusion = _check((CORPUS / "seq" / "03-ex-falso.sproof").read_text())
    assert sequents.serialize_sequent(conclusion) == "p, ~p |- q"


def test_empty_context_export():
    proof = sequents.parse_sequent_script(
        (CORPUS / "seq" / "02-false-antecedent.sproof").read_text()
    )
    final = sequents.empty_context_export(proof)
    assert sequents.serialize_sequent(final) == "|- ~p -> (p -> q)"


def test_empty_context_export_needs_single_premise():
    proof = sequents.parse_sequent_script(
        (CORPUS / "seq" / "03-ex-falso.sproof").read_text()
    )
    with pytest.raises(ProofError, match="exactly one premise"):
        sequents.empty_context_export(proof)


def test_axiom_step_must_be_reflexive():
    with pytest.raises(ProofError):
        _check("1: p |- q ; axiom")


def test_add_keeps_the_conclusion():
    with pytest.raises(ProofError, match="keeps the conclusion"):
        _check("1: p |- p ; axiom\n2: p, ~q |- ~q ; add 1 ~q")


def test_export_discharges_a_premise():
    with pytest.raises(ProofError):
        _check("1: p |- p ; axiom\n2: p |- q -> p ; export 1")


def test_imply_contexts_must_match():
    script = """
    1: p -> q |- p -> q ; axiom
    2: p |- p ; axiom
    3: p |- q ; imply 2 1
    """
    with pytest.raises(ProofError):
        _check(script)


def test_raa_premises_must_be_contradictory():
    script = """
    1: p |- p ; axiom
    2: ~q, p |- p ; add 1 ~q
    3: ~q, p |- p ; add 1 ~q
    4: p |- q ; raa 2 3
    """
    with pytest.raises(ProofError):
        _check(script)


# ------------------------------------------------------- semantic validity


def test_semantically_valid_known_cases():
    assert sequents.semantically_valid(sequents.parse_sequent("p, ~p |- q"))
    assert sequents.semantically_valid(sequents.parse_sequent("|- p -> p"))
    assert not sequents.semantically_valid(sequents.parse_sequent("p |- q"))


# Random proofs are produced by replaying the rules themselves; the
# checker must accept each one and the conclusion must be truth-table
# sound, an oracle the rules never consult.


def _random_formula(rng, names, depth=2):
    if depth == 0 or rng.random() < 0.4:
        f = Var(rng.choice(names))
    else:
        f = Implies_(
            _random_formula(rng, names, depth - 1),
            _random_formula(rng, names, depth - 1),
        )
    while rng.random() < 0.3:
        f = Not(f)
    return f


def _random_proof(rng, names=("p", "q", "r")):
    steps = []

    def emit(sequent, just):
        steps.append(SequentStep(sequent, just))
        return len(steps) - 1

    f = _random_formula(rng, names)
    emit(Sequent((f,), f), SeqAxiom())
    for _ in range(rng.randint(1, 12)):
        op = rng.choice(("axiom", "add", "export", "imply", "raa"))
        if op == "axiom":
            f = _random_formula(rng, names)
            emit(Sequent((f,), f), SeqAxiom())
        elif op == "add":
            i = rng.randrange(len(steps))
            extra = _random_formula(rng, names)
            s = steps[i].sequent
            if extra in s.context:
                continue
            emit(Sequent(s.premises + (extra,), s.conclusion), SeqAdd(i, extra))
        elif op == "export":
            i = rng.randrange(len(steps))
            s = steps[i].sequent
            if not s.premises:
                continue
            a = rng.choice(sorted(s.context, key=props.print_infix))
            emit(
                Sequent(
                    tuple(g for g in s.premises if g != a),
                    Implies_(a, s.conclusion),
                ),
                SeqExport(i),
            )
        elif op == "imply":
            # build a matching implication step for a random minor premise
            i = rng.randrange(len(steps))
            minor = steps[i].sequent
            arrow = Implies_(minor.conclusion, _random_formula(rng, names))
            if arrow in minor.context:
                continue
            j = emit(Sequent((arrow,), arrow), SeqAxiom())
            for g in minor.premises:
                s = steps[j].sequent
                if g in s.context:
                    continue
                j = emit(Sequent(s.premises + (g,), s.conclusion), SeqAdd(j, g))
            s = steps[i].sequent
            i = emit(Sequent(s.premises + (arrow,), s.conclusion), SeqAdd(i, arrow))
            emit(Sequent(steps[i].sequent.premises, arrow.right), SeqImply(i, j))
        else:
            # the reductio scaffold: Q, ~Q, ~P |- Q and ... |- ~Q, then raa
            goal = _random_formula(rng, names)
            contra = _random_formula(rng, names)
            if Not(goal) == contra or goal == Not(contra) or goal == contra:
                continue
            i = emit(Sequent((contra,), contra), SeqAxiom())
            j = emit(Sequent((Not(contra),), Not(contra)), SeqAxiom())
            i = emit(
                Sequent((contra, Not(goal)), contra), SeqAdd(i, Not(goal))
            )
            j = emit(
                Sequent((Not(contra), Not(goal)), Not(contra)), SeqAdd(j, Not(goal))
            )
            i = emit(
                Sequent((contra, Not(goal), Not(contra)), contra),
                SeqAdd(i, Not(contra)),
            )
            j = emit(
                Sequent((Not(contra), Not(goal), contra), Not(contra)),
                SeqAdd(j, contra),
            )
            emit(Sequent((contra, Not(contra)), goal), SeqRaa(i, j))
    return SequentProof(tuple(steps))


def test_random_sequent_proofs_are_sound():
    rng = random.Random(1939)
    for _ in range(200):
        proof = _random_proof(rng)
        conclusion = sequents.check_sequent_proof(proof)
        assert sequents.semantically_valid(conclusion)
