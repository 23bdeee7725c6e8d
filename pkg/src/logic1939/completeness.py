"""Constructive completeness for the propositional calculus.

synthesize turns any tautology into a kernel-checkable proof.  The
construction follows the classic two-stage argument: first an
auxiliary theorem shows that under each truth-value assignment,
written as a fundamental conjunction of literals, the formula (or its
negation, if the row falsifies it) follows; then the case variables
are eliminated one at a time against the law of excluded middle.
Defined connectives are expanded before the induction and folded back
at the end, so the synthesized proof literally passes through the
formula's primitive disjunctive skeleton.
"""

from __future__ import annotations

import itertools

from .errors import NotATautology, UnsupportedConnective
from .hilbert import Proof, ProofBuilder
from .props import (
    And_,
    Bin,
    Connective,
    Not,
    PropFormula,
    Var,
    variables,
)
from .recipes import (
    r_commute,
    r_dilemma,
    r_export,
    r_syll,
    r_transpose_pn,
    thm_add_p,
    thm_conj_elim_l,
    thm_conj_elim_r,
    thm_dn_intro,
    thm_excluded_middle,
    thm_identity,
)
from .rewrite import expand_definition
from .semantics import evaluate, is_tautology

_EXPANDABLE = {
    Connective.IMPLIES: "imp",
    Connective.AND: "and",
    Connective.EQUIV: "equiv",
}


def _expansion_plan(f: PropFormula):
    """Expand defined connectives one at a time, leftmost-outermost
    first, returning the primitive formula and the rewrites applied."""
    plan = []
    while True:
        spot = _first_defined(f, ())
        if spot is None:
            return f, plan
        path, rule = spot
        plan.append((path, rule))
        f = _rewrite_at(f, path, rule)


def _first_defined(f: PropFormula, path):
    if isinstance(f, Var):
        return None
    if isinstance(f, Not):
        return _first_defined(f.sub, path + ("s",))
    rule = _EXPANDABLE.get(f.conn)
    if rule is not None:
        return path, rule
    if f.conn is not Connective.OR:
        raise UnsupportedConnective(
            f"the proof system has no definition for {f.conn.value!r}"
        )
    left = _first_defined(f.left, path + ("l",))
    if left is not None:
        return left
    return _first_defined(f.right, path + ("r",))


def _rewrite_at(f: PropFormula, path, rule: str) -> PropFormula:
    if not path:
        return expand_definition(f, rule)
    move, rest = path[0], path[1:]
    if move == "s":
        return Not(_rewrite_at(f.sub, rest, rule))
    if move == "l":
        return Bin(f.conn, _rewrite_at(f.left, rest, rule), f.right)
    return Bin(f.conn, f.left, _rewrite_at(f.right, rest, rule))


def fundamental_literals(names, values) -> tuple[PropFormula, ...]:
    return tuple(Var(n) if v else Not(Var(n)) for n, v in zip(names, values))


def _conjoin(lits) -> PropFormula:
    f = lits[0]
    for lit in lits[1:]:
        f = And_(f, lit)
    return f


def _member(b: ProofBuilder, lits, j: int) -> int:
    """Derive leftassoc(lits) > lits[j]."""
    n = len(lits)
    if n == 1:
        return thm_identity(b, lits[0])
    prefix = _conjoin(lits[:-1])
    if j == n - 1:
        return thm_conj_elim_r(b, prefix, lits[-1])
    head = thm_conj_elim_l(b, prefix, lits[-1])
    return r_syll(b, head, _member(b, lits[:-1], j))


def _row_lemma(b: ProofBuilder, lits, positions, g: PropFormula, env) -> int:
    """Derive P > g if the row satisfies g, else P > ~g, where P is the
    fundamental conjunction of lits."""
    if isinstance(g, Var):
        idx = _member(b, lits, positions[g.name])
        return idx
    if isinstance(g, Not):
        if evaluate(g.sub, env):
            inner = _row_lemma(b, lits, positions, g.sub, env)
            return r_syll(b, inner, thm_dn_intro(b, g.sub))
        return _row_lemma(b, lits, positions, g.sub, env)
    if evaluate(g.left, env):
        inner = _row_lemma(b, lits, positions, g.left, env)
        a1 = b.axiom_instance("A1", {"p": g.left, "q": g.right})
        return r_syll(b, inner, a1)
    if evaluate(g.right, env):
        inner = _row_lemma(b, lits, positions, g.right, env)
        return r_syll(b, inner, thm_add_p(b, g.right, g.left))
    li = r_transpose_pn(b, _row_lemma(b, lits, positions, g.left, env))
    ri = r_transpose_pn(b, _row_lemma(b, lits, positions, g.right, env))
    d = r_dilemma(b, li, ri)
    return r_transpose_pn(b, d)


def _eliminate(b: ProofBuilder, names, rows) -> int:
    """rows, in canonical assignment order, holds indices of P > E.
    Peel variables off right to left until only E remains."""
    for depth in range(len(names), 0, -1):
        v = Var(names[depth - 1])
        paired = []
        for i in range(0, len(rows), 2):
            idx_t, idx_f = rows[i], rows[i + 1]
            if depth == 1:
                d = r_dilemma(b, idx_f, idx_t)
            else:
                c_t = r_commute(b, r_export(b, idx_t))
                c_f = r_commute(b, r_export(b, idx_f))
                d = r_dilemma(b, c_f, c_t)
            paired.append(b.mp(d, thm_excluded_middle(b, v)))
        rows = paired
    return rows[0]


def synthesize(f: PropFormula) -> Proof:
    """Build a kernel proof of a tautology.

    Raises NotATautology with the first falsifying assignment, or
    UnsupportedConnective when the formula lies outside the proof
    system's language.
    """
    primitive, plan = _expansion_plan(f)
    ok, counterexample = is_tautology(f)
    if not ok:
        raise NotATautology(counterexample)
    names = variables(primitive)
    positions = {n: i for i, n in enumerate(names)}
    b = ProofBuilder()
    if not names:
        raise UnsupportedConnective("a formula with no variables cannot arise")
    rows = []
    for values in itertools.product((True, False), repeat=len(names)):
        env = dict(zip(names, values))
        lits = fundamental_literals(names, values)
        rows.append(_row_lemma(b, lits, positions, primitive, env))
    idx = _eliminate(b, names, rows)
    for path, rule in reversed(plan):
        idx = b.defrw(idx, path, rule, "fold")
    return Proof(tuple(b.proof().steps[: idx + 1]))
