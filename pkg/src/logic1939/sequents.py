"""Checker for the simplified sequent system over ~ and >.

A sequent collects finitely many premises and one conclusion, all in
the language of negation and implication.  Proofs start from axioms
P |- P and grow by four rules: adding one premise, exporting a premise
into the conclusion, implication (from D |- P and D |- P > Q infer
D |- Q), and reductio ad absurdum.  Premise collections are compared
as finite sets; order and repetition carry no weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ProofError, ScriptError, WellFormednessError
from .props import (
    Bin,
    Connective,
    Implies_,
    Not,
    PropFormula,
    Var,
    parse_infix,
    print_infix,
    variables,
)
from .semantics import evaluate


def _language_ok(f: PropFormula) -> bool:
    if isinstance(f, Var):
        return True
    if isinstance(f, Not):
        return _language_ok(f.sub)
    return f.conn is Connective.IMPLIES and _language_ok(f.left) and _language_ok(f.right)


@dataclass(frozen=True)
class Sequent:
    premises: tuple[PropFormula, ...]
    conclusion: PropFormula

    def __post_init__(self):
        for f in self.premises + (self.conclusion,):
            if not _language_ok(f):
                raise WellFormednessError(
                    "sequent formulas may use only ~ and ->"
                )

    @property
    def context(self) -> frozenset[PropFormula]:
        return frozenset(self.premises)


@dataclass(frozen=True)
class SeqAxiom:
    pass


@dataclass(frozen=True)
class SeqAdd:
    step: int
    formula: PropFormula


@dataclass(frozen=True)
class SeqExport:
    step: int


@dataclass(frozen=True)
class SeqImply:
    minor: int
    major: int


@dataclass(frozen=True)
class SeqRaa:
    positive: int
    negative: int


SequentJustification = SeqAxiom | SeqAdd | SeqExport | SeqImply | SeqRaa


@dataclass(frozen=True)
class SequentStep:
    sequent: Sequent
    just: SequentJustification


@dataclass(frozen=True)
class SequentProof:
    steps: tuple[SequentStep, ...]

    @property
    def conclusion(self) -> Sequent:
        return self.steps[-1].sequent

    def __len__(self) -> int:
        return len(self.steps)


def _ref(i: int, bound: int, no: int, what: str) -> None:
    if not (0 <= i < bound):
        raise ProofError(no, "BadReference", f"{what} cites step {i + 1}, which is not an earlier step")


def check_sequent_proof(proof: SequentProof) -> Sequent:
    """Check a sequent proof; returns the final sequent or raises
    ProofError with codes BadAxiom, ContextMismatch or ShapeMismatch."""
    if not proof.steps:
        raise ProofError(0, "Empty", "a proof needs at least one step")
    for i, step in enumerate(proof.steps):
        no = i + 1
        cur = step.sequent
        j = step.just
        if isinstance(j, SeqAxiom):
            if cur.context != frozenset({cur.conclusion}):
                raise ProofError(no, "BadAxiom", "axioms have the shape P |- P")
        elif isinstance(j, SeqAdd):
            _ref(j.step, i, no, "premise addition")
            prev = proof.steps[j.step].sequent
            if cur.conclusion != prev.conclusion:
                raise ProofError(no, "ShapeMismatch", "adding a premise keeps the conclusion")
            if cur.context != prev.context | {j.formula}:
                raise ProofError(no, "ContextMismatch", "context must grow by exactly the added premise")
        elif isinstance(j, SeqExport):
            _ref(j.step, i, no, "exportation")
            prev = proof.steps[j.step].sequent
            c = cur.conclusion
            if not (isinstance(c, Bin) and c.conn is Connective.IMPLIES):
                raise ProofError(no, "ShapeMismatch", "exportation concludes an implication")
            if prev.conclusion != c.right:
                raise ProofError(no, "ShapeMismatch", "exported conclusion must match the consequent")
            if prev.context != cur.context | {c.left}:
                raise ProofError(no, "ContextMismatch", "exported premise must come out of the context")
        elif isinstance(j, SeqImply):
            _ref(j.minor, i, no, "implication")
            _ref(j.major, i, no, "implication")
            minor = proof.steps[j.minor].sequent
            major = proof.steps[j.major].sequent
            c = major.conclusion
            if not (isinstance(c, Bin) and c.conn is Connective.IMPLIES):
                raise ProofError(no, "ShapeMismatch", "major premise must conclude an implication")
            if c.left != minor.conclusion:
                raise ProofError(no, "ShapeMismatch", "minor conclusion must match the antecedent")
            if minor.context != major.context:
                raise ProofError(no, "ContextMismatch", "implication premises need one context")
            if cur.context != major.context:
                raise ProofError(no, "ContextMismatch", "conclusion keeps the premises' context")
            if cur.conclusion != c.right:
                raise ProofError(no, "ShapeMismatch", "conclusion must be the consequent")
        elif isinstance(j, SeqRaa):
            _ref(j.positive, i, no, "reductio")
            _ref(j.negative, i, no, "reductio")
            pos = proof.steps[j.positive].sequent
            neg = proof.steps[j.negative].sequent
            if neg.conclusion != Not(pos.conclusion):
                raise ProofError(no, "ShapeMismatch", "reductio premises must conclude Q and ~Q")
            aug = cur.context | {Not(cur.conclusion)}
            if pos.context != aug or neg.context != aug:
                raise ProofError(
                    no, "ContextMismatch", "reductio premises must carry the context plus ~P"
                )
        else:
            raise ProofError(no, "BadJustification", f"unknown justification {j!r}")
    return proof.conclusion


def empty_context_export(proof: SequentProof) -> Sequent:
    """Export the lone premise of the final sequent, leaving none."""
    final = check_sequent_proof(proof)
    ctx = final.context
    if len(ctx) != 1:
        raise ProofError(
            len(proof.steps), "ShapeMismatch", "final sequent must carry exactly one premise"
        )
    (p,) = ctx
    return Sequent((), Implies_(p, final.conclusion))


def semantically_valid(sequent: Sequent) -> bool:
    """True when every assignment satisfying all premises satisfies the
    conclusion."""
    names = []
    for f in sequent.premises + (sequent.conclusion,):
        for v in variables(f):
            if v not in names:
                names.append(v)
    for values in itertools.product((True, False), repeat=len(names)):
        env = dict(zip(names, values))
        if all(evaluate(p, env) for p in sequent.premises) and not evaluate(
            sequent.conclusion, env
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# Sequent scripts


def serialize_sequent(s: Sequent) -> str:
    left = ", ".join(print_infix(p) for p in s.premises)
    return (left + " " if left else "") + "|- " + print_infix(s.conclusion)


def serialize_sequent_proof(proof: SequentProof) -> str:
    lines = []
    for i, step in enumerate(proof.steps):
        j = step.just
        if isinstance(j, SeqAxiom):
            just = "axiom"
        elif isinstance(j, SeqAdd):
            just = f"add {j.step + 1} {print_infix(j.formula)}"
        elif isinstance(j, SeqExport):
            just = f"export {j.step + 1}"
        elif isinstance(j, SeqImply):
            just = f"imply {j.minor + 1} {j.major + 1}"
        else:
            just = f"raa {j.positive + 1} {j.negative + 1}"
        lines.append(f"{i + 1}: {serialize_sequent(step.sequent)} ; {just}")
    return "\n".join(lines) + "\n"


def parse_sequent(text: str, line_no: int = 0) -> Sequent:
    if "|-" not in text:
        raise ScriptError(line_no, "a sequent needs |-")
    left, right = text.split("|-", 1)
    try:
        conclusion = parse_infix(right)
        premises = tuple(parse_infix(part) for part in left.split(",") if part.strip())
        return Sequent(premises, conclusion)
    except WellFormednessError as exc:
        raise ScriptError(line_no, str(exc)) from None
    except Exception as exc:
        raise ScriptError(line_no, f"bad sequent: {exc}") from None


def parse_sequent_script(text: str) -> SequentProof:
    """Parse the numbered sequent script format.

    Lines read "n: f1, f2 |- g ; justification" with # comments; the
    justifications are axiom, add <step> <formula>, export <step>,
    imply <minor> <major> and raa <positive> <negative>.
    """
    steps: list[SequentStep] = []
    expect = 1
    for raw_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ScriptError(raw_no, "expected 'n: sequent ; justification'")
        no_text, rest = line.split(":", 1)
        try:
            no = int(no_text.strip())
        except ValueError:
            raise ScriptError(raw_no, f"bad step number {no_text.strip()!r}") from None
        if no != expect:
            raise ScriptError(raw_no, f"steps must be numbered in order; expected {expect}")
        expect += 1
        if ";" not in rest:
            raise ScriptError(raw_no, "missing ; before the justification")
        seq_text, just_text = rest.rsplit(";", 1)
        sequent = parse_sequent(seq_text, raw_no)
        words = just_text.split()
        if not words:
            raise ScriptError(raw_no, "missing justification")

        def ref(word: str) -> int:
            try:
                k = int(word)
            except ValueError:
                raise ScriptError(raw_no, f"bad step reference {word!r}") from None
            if not (1 <= k <= len(steps)):
                raise ScriptError(raw_no, f"step {k} is not an earlier step")
            return k - 1

        kind = words[0]
        if kind == "axiom" and len(words) == 1:
            just: SequentJustification = SeqAxiom()
        elif kind == "add" and len(words) >= 3:
            try:
                formula = parse_infix(" ".join(words[2:]))
            except Exception as exc:
                raise ScriptError(raw_no, f"bad formula: {exc}") from None
            if not _language_ok(formula):
                raise ScriptError(raw_no, "sequent formulas may use only ~ and ->")
            just = SeqAdd(ref(words[1]), formula)
        elif kind == "export" and len(words) == 2:
            just = SeqExport(ref(words[1]))
        elif kind == "imply" and len(words) == 3:
            just = SeqImply(ref(words[1]), ref(words[2]))
        elif kind == "raa" and len(words) == 3:
            just = SeqRaa(ref(words[1]), ref(words[2]))
        else:
            raise ScriptError(raw_no, f"unknown justification {just_text.strip()!r}")
        steps.append(SequentStep(sequent, just))
    if not steps:
        raise ScriptError(0, "script has no steps")
    return SequentProof(tuple(steps))
