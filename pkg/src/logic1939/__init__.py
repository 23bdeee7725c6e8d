"""An executable edition of a 1939 logic course: propositional and
predicate calculi, truth tables, proof checking and synthesis, finite
models, syllogistic, and relation algebra.

The most used names are re-exported here; each submodule remains the
authoritative home of its full API.
"""

from .config import Config, DEFAULT
from .errors import LogicError, ProofError
from .props import (
    Bin,
    Connective,
    Not,
    PropFormula,
    Var,
    parse_infix,
    parse_polish,
    print_infix,
    print_polish,
    substitute,
)
from .semantics import (
    definability_closure,
    is_tautology,
    to_cnf,
    to_dnf,
    truth_table,
)
from .hilbert import (
    AXIOMS,
    Proof,
    ProofBuilder,
    check_proof,
    enumerate_theorems,
    parse_proof_script,
    serialize_proof,
)
from .completeness import synthesize
from .matrices import BERNAYS, Matrix, independence_report
from .sequents import check_sequent_proof, parse_sequent_script
from .preds import parse_pred, print_pred
from .models import FiniteModel, find_countermodel, valid_in_all
from .pred_kernel import (
    PredBuilder,
    check_pred_proof,
    parse_pred_proof_script,
    pred_theorem_library,
    serialize_pred_proof,
)
from .recipes import build_theorem, theorem_library
from .syllogistic import (
    FiniteClass,
    Mood,
    class_valid,
    classify_moods,
    decide_monadic,
    moods_report,
    parse_class,
    print_class,
)
from .relations import FiniteRelation, classify, rel_op, relative_product

__version__ = "0.1.0"

__all__ = [
    "AXIOMS",
    "BERNAYS",
    "Bin",
    "Config",
    "Connective",
    "DEFAULT",
    "FiniteClass",
    "FiniteModel",
    "FiniteRelation",
    "LogicError",
    "Matrix",
    "Mood",
    "Not",
    "PredBuilder",
    "Proof",
    "ProofBuilder",
    "ProofError",
    "PropFormula",
    "Var",
    "build_theorem",
    "check_pred_proof",
    "check_proof",
    "check_sequent_proof",
    "class_valid",
    "classify",
    "classify_moods",
    "decide_monadic",
    "definability_closure",
    "enumerate_theorems",
    "find_countermodel",
    "independence_report",
    "is_tautology",
    "moods_report",
    "parse_class",
    "parse_infix",
    "parse_polish",
    "parse_pred",
    "parse_pred_proof_script",
    "parse_proof_script",
    "parse_sequent_script",
    "pred_theorem_library",
    "print_class",
    "print_infix",
    "print_polish",
    "print_pred",
    "rel_op",
    "relative_product",
    "serialize_pred_proof",
    "serialize_proof",
    "substitute",
    "synthesize",
    "theorem_library",
    "to_cnf",
    "to_dnf",
    "truth_table",
    "valid_in_all",
]
