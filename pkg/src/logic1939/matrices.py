"""Many-valued logical matrices and the independence argument.

A matrix fixes a finite set of truth values, a designated subset, and
tables for negation and disjunction; the other connectives follow
from their definitions.  If every axiom but one comes out designated
under all assignments, modus ponens never leads out of the designated
values, and the remaining axiom takes an undesignated value somewhere,
then that axiom cannot be derived from the others: substitution and
the rules preserve the property of being designated everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import UnsupportedConnective
from .hilbert import AXIOMS
from .props import Bin, Connective, Not, PropFormula, Var, variables


@dataclass(frozen=True)
class Matrix:
    values: tuple[int, ...]
    designated: frozenset[int]
    neg_table: tuple[tuple[int, int], ...]
    or_table: tuple[tuple[int, int, int], ...]
    _neg: dict = field(init=False, repr=False, compare=False)
    _or: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vals = set(self.values)
        if not self.designated <= vals:
            raise ValueError("designated values must be matrix values")
        neg = {v: r for v, r in self.neg_table}
        disj = {(a, b): r for a, b, r in self.or_table}
        if set(neg) != vals or any(r not in vals for r in neg.values()):
            raise ValueError("negation table must cover exactly the matrix values")
        if set(disj) != set(itertools.product(self.values, repeat=2)) or any(
            r not in vals for r in disj.values()
        ):
            raise ValueError("disjunction table must cover exactly the value pairs")
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_or", disj)

    def neg_of(self, a: int) -> int:
        return self._neg[a]

    def or_of(self, a: int, b: int) -> int:
        return self._or[(a, b)]

    def imp_of(self, a: int, b: int) -> int:
        return self.or_of(self.neg_of(a), b)

    def and_of(self, a: int, b: int) -> int:
        return self.neg_of(self.or_of(self.neg_of(a), self.neg_of(b)))

    def equiv_of(self, a: int, b: int) -> int:
        return self.and_of(self.imp_of(a, b), self.imp_of(b, a))

    def evaluate(self, f: PropFormula, env: dict[str, int]) -> int:
        if isinstance(f, Var):
            return env[f.name]
        if isinstance(f, Not):
            return self.neg_of(self.evaluate(f.sub, env))
        a = self.evaluate(f.left, env)
        b = self.evaluate(f.right, env)
        if f.conn is Connective.OR:
            return self.or_of(a, b)
        if f.conn is Connective.AND:
            return self.and_of(a, b)
        if f.conn is Connective.IMPLIES:
            return self.imp_of(a, b)
        if f.conn is Connective.EQUIV:
            return self.equiv_of(a, b)
        raise UnsupportedConnective(f"no matrix reading for {f.conn.value!r}")

    def tautology(self, f: PropFormula):
        """(True, None) when f is designated under every assignment,
        else (False, first refuting assignment, its value)."""
        names = variables(f)
        for values in itertools.product(self.values, repeat=len(names)):
            env = dict(zip(names, values))
            got = self.evaluate(f, env)
            if got not in self.designated:
                return False, env, got
        return True, None, None

    def mp_sound(self):
        """(True, None) when designated premises force a designated
        conclusion, else (False, offending value pair)."""
        for a, b in itertools.product(self.values, repeat=2):
            if a in self.designated and self.imp_of(a, b) in self.designated:
                if b not in self.designated:
                    return False, (a, b)
        return True, None


def two_valued() -> Matrix:
    return Matrix(
        values=(0, 1),
        designated=frozenset({1}),
        neg_table=((0, 1), (1, 0)),
        or_table=tuple(
            (a, b, 1 if (a, b) != (0, 0) else 0) for a, b in itertools.product((0, 1), repeat=2)
        ),
    )


def bernays_matrix() -> Matrix:
    """The three-valued matrix showing A2 independent of A1, A3, A4.

    The third value behaves like a defective truth: disjoining it with
    itself repairs it to 1, which is exactly what A2 forbids.
    """
    or_rows = []
    for a, b in itertools.product((0, 1, 2), repeat=2):
        if a == 1 or b == 1:
            r = 1
        elif a == 2 and b == 2:
            r = 1
        elif a == 0 and b == 0:
            r = 0
        else:
            r = 2
        or_rows.append((a, b, r))
    return Matrix(
        values=(0, 1, 2),
        designated=frozenset({1}),
        neg_table=((0, 1), (1, 0), (2, 2)),
        or_table=tuple(or_rows),
    )


BERNAYS = bernays_matrix()


@dataclass(frozen=True)
class IndependenceReport:
    target: str
    established: bool
    kept_tautologies: tuple[str, ...]
    kept_failures: tuple[str, ...]
    mp_ok: bool
    mp_witness: tuple[int, int] | None
    witness: dict[str, int] | None
    witness_value: int | None


def independence_report(matrix: Matrix, target: str = "A2") -> IndependenceReport:
    """Check whether the matrix separates one axiom from the rest."""
    if target not in AXIOMS:
        raise KeyError(target)
    kept_good, kept_bad = [], []
    for name, schema in AXIOMS.items():
        if name == target:
            continue
        ok, _, _ = matrix.tautology(schema)
        (kept_good if ok else kept_bad).append(name)
    mp_ok, mp_witness = matrix.mp_sound()
    ok, env, got = matrix.tautology(AXIOMS[target])
    established = bool(kept_bad == [] and mp_ok and not ok)
    return IndependenceReport(
        target=target,
        established=established,
        kept_tautologies=tuple(kept_good),
        kept_failures=tuple(kept_bad),
        mp_ok=mp_ok,
        mp_witness=mp_witness,
        witness=None if ok else env,
        witness_value=None if ok else got,
    )


# ---------------------------------------------------------------------------
# Matrix files


def parse_matrix(text: str) -> Matrix:
    """Read a matrix from its plain text form.

    Lines: "values 0 1 2", "designated 1", "not <v> <r>" and
    "or <a> <b> <r>", with # comments.
    """
    values = None
    designated = None
    neg_rows, or_rows = [], []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        try:
            if words[0] == "values":
                values = tuple(int(w) for w in words[1:])
            elif words[0] == "designated":
                designated = frozenset(int(w) for w in words[1:])
            elif words[0] == "not" and len(words) == 3:
                neg_rows.append((int(words[1]), int(words[2])))
            elif words[0] == "or" and len(words) == 4:
                or_rows.append((int(words[1]), int(words[2]), int(words[3])))
            else:
                raise ValueError(f"line {no}: unrecognised matrix line {line!r}")
        except ValueError as exc:
            raise ValueError(f"line {no}: {exc}" if "line" not in str(exc) else str(exc)) from None
    if values is None or designated is None:
        raise ValueError("matrix needs values and designated lines")
    return Matrix(values, designated, tuple(neg_rows), tuple(or_rows))


def serialize_matrix(matrix: Matrix) -> str:
    lines = ["values " + " ".join(str(v) for v in matrix.values)]
    lines.append("designated " + " ".join(str(v) for v in sorted(matrix.designated)))
    for v, r in matrix.neg_table:
        lines.append(f"not {v} {r}")
    for a, b, r in matrix.or_table:
        lines.append(f"or {a} {b} {r}")
    return "\n".join(lines) + "\n"
