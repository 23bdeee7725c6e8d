"""Derived rules and the theorem library.

Nothing here extends the kernel.  Every function builds primitive
steps through a builder and returns the index of its conclusion, so a
derived rule is just a recipe for axiom citations, substitutions,
modus ponens and definitional rewrites.  Theorem recipes take the
formulas they are about as arguments; on builders that allow
substitution into derived steps the canonical theorem is derived once
and instances are substitution steps, otherwise each instance is
derived from scratch.
"""

from __future__ import annotations

import functools

from .errors import PreconditionViolated
from .props import And_, Bin, Connective, Implies_, Not, Or_, Var, parse_infix

_CANON = ("p", "q", "r", "s")


def _implies(f):
    if isinstance(f, Bin) and f.conn is Connective.IMPLIES:
        return f.left, f.right
    raise PreconditionViolated("premise must be an implication")


def _conj(f):
    if isinstance(f, Bin) and f.conn is Connective.AND:
        return f.left, f.right
    raise PreconditionViolated("premise must be a conjunction")


def _neg(f):
    if isinstance(f, Not):
        return f.sub
    raise PreconditionViolated("premise must be a negation")


def _equiv(f):
    if isinstance(f, Bin) and f.conn is Connective.EQUIV:
        return f.left, f.right
    raise PreconditionViolated("premise must be an equivalence")


def theorem(fn):
    """Memoise a theorem recipe and, where the builder permits it,
    derive the canonical statement once and instantiate by
    substitution."""

    name = fn.__name__

    @functools.wraps(fn)
    def wrapped(b, *args):
        key = (name,) + args

        def build():
            canon = tuple(Var(v) for v in _CANON[: len(args)])
            if args != canon and getattr(b, "can_substitute", False):
                base = wrapped(b, *canon)
                return b.subst(base, dict(zip(_CANON, args)))
            return fn(b, *args)

        return b.cached(key, build)

    return wrapped


# ---------------------------------------------------------------------------
# Syllogism and the basic one-premise moves


@theorem
def thm_syllogism(b, P, Q, R):
    """(P > Q) > ((R > P) > (R > Q))"""
    a = b.axiom_instance("A4", {"p": P, "q": Q, "r": Not(R)})
    a = b.defrw(a, ("r", "l"), "imp", "fold")
    return b.defrw(a, ("r", "r"), "imp", "fold")


def r_syll(b, i, j):
    """From X > Y and Y > Z conclude X > Z."""
    x, y = _implies(b.formula(i))
    y2, z = _implies(b.formula(j))
    if y != y2:
        raise PreconditionViolated("syllogism premises do not chain")
    t = thm_syllogism(b, y, z, x)
    return b.mp(b.mp(t, j), i)


@theorem
def thm_identity(b, X):
    """X > X"""
    a1 = b.axiom_instance("A1", {"p": X, "q": X})
    a2 = b.axiom_instance("A2", {"p": X})
    return r_syll(b, a1, a2)


@theorem
def thm_excluded_middle(b, X):
    """~X | X"""
    return b.defrw(thm_identity(b, X), (), "imp", "expand")


@theorem
def thm_dn_intro(b, X):
    """X > ~~X"""
    e = thm_excluded_middle(b, Not(X))
    a3 = b.axiom_instance("A3", {"p": Not(Not(X)), "q": Not(X)})
    m = b.mp(a3, e)
    return b.defrw(m, (), "imp", "fold")


def r_add_left(b, i, R):
    """From X > Y conclude R | X > R | Y."""
    x, y = _implies(b.formula(i))
    return b.mp(b.axiom_instance("A4", {"p": x, "q": y, "r": R}), i)


def r_add_right(b, i, R):
    """From X > Y conclude X | R > Y | R."""
    x, y = _implies(b.formula(i))
    a = b.axiom_instance("A3", {"p": x, "q": R})
    m = r_add_left(b, i, R)
    z = b.axiom_instance("A3", {"p": R, "q": y})
    return r_syll(b, r_syll(b, a, m), z)


@theorem
def thm_dn_elim(b, X):
    """~~X > X"""
    d = thm_dn_intro(b, Not(X))
    ar = r_add_right(b, d, X)
    m = b.mp(ar, thm_excluded_middle(b, X))
    return b.defrw(m, (), "imp", "fold")


def r_add_both(b, i, j):
    """From X > Y and R > S conclude X | R > Y | S."""
    x, y = _implies(b.formula(i))
    r, s = _implies(b.formula(j))
    return r_syll(b, r_add_right(b, i, r), r_add_left(b, j, y))


def r_dilemma(b, i, j):
    """From X > Z and Y > Z conclude X | Y > Z."""
    _, z = _implies(b.formula(i))
    ab = r_add_both(b, i, j)
    a2 = b.axiom_instance("A2", {"p": z})
    return r_syll(b, ab, a2)


@theorem
def thm_add_p(b, X, Y):
    """X > Y | X"""
    a1 = b.axiom_instance("A1", {"p": X, "q": Y})
    a3 = b.axiom_instance("A3", {"p": X, "q": Y})
    return r_syll(b, a1, a3)


@theorem
def thm_adjoin_antecedent(b, X, Y):
    """X > (Y > X)"""
    t = thm_add_p(b, X, Not(Y))
    return b.defrw(t, ("r",), "imp", "fold")


@theorem
def thm_ex_falso(b, X, Y):
    """~X > (X > Y)"""
    a = b.axiom_instance("A1", {"p": Not(X), "q": Y})
    return b.defrw(a, ("r",), "imp", "fold")


def r_transpose(b, i):
    """From X > Y conclude ~Y > ~X."""
    x, y = _implies(b.formula(i))
    e = b.defrw(i, (), "imp", "expand")
    al = r_add_left(b, thm_dn_intro(b, y), Not(x))
    m1 = b.mp(al, e)
    a3 = b.axiom_instance("A3", {"p": Not(x), "q": Not(Not(y))})
    m2 = b.mp(a3, m1)
    return b.defrw(m2, (), "imp", "fold")


def r_transpose_pn(b, i):
    """From X > ~Y conclude Y > ~X."""
    x, ny = _implies(b.formula(i))
    y = _neg(ny)
    e = b.defrw(i, (), "imp", "expand")
    a3 = b.axiom_instance("A3", {"p": Not(x), "q": Not(y)})
    m = b.mp(a3, e)
    return b.defrw(m, (), "imp", "fold")


def r_transpose_np(b, i):
    """From ~X > Y conclude ~Y > X."""
    nx, _ = _implies(b.formula(i))
    x = _neg(nx)
    return r_syll(b, r_transpose(b, i), thm_dn_elim(b, x))


def r_transpose_nn(b, i):
    """From ~X > ~Y conclude Y > X."""
    nx, _ = _implies(b.formula(i))
    x = _neg(nx)
    return r_syll(b, r_transpose_pn(b, i), thm_dn_elim(b, x))


@theorem
def thm_transposition(b, X, Y):
    """(X > Y) > (~Y > ~X)"""
    a4 = b.axiom_instance("A4", {"p": Y, "q": Not(Not(Y)), "r": Not(X)})
    m1 = b.mp(a4, thm_dn_intro(b, Y))
    a3 = b.axiom_instance("A3", {"p": Not(X), "q": Not(Not(Y))})
    s = r_syll(b, m1, a3)
    s = b.defrw(s, ("l",), "imp", "fold")
    return b.defrw(s, ("r",), "imp", "fold")


@theorem
def thm_transposition_pn(b, X, Y):
    """(X > ~Y) > (Y > ~X)"""
    a3 = b.axiom_instance("A3", {"p": Not(X), "q": Not(Y)})
    s = b.defrw(a3, ("l",), "imp", "fold")
    return b.defrw(s, ("r",), "imp", "fold")


@theorem
def thm_transposition_np(b, X, Y):
    """(~X > Y) > (~Y > X)"""
    t = thm_transposition(b, Not(X), Y)
    t2 = b.mp(thm_syllogism(b, Not(Not(X)), X, Not(Y)), thm_dn_elim(b, X))
    return r_syll(b, t, t2)


@theorem
def thm_transposition_nn(b, X, Y):
    """(~X > ~Y) > (Y > X)"""
    t = thm_transposition_pn(b, Not(X), Y)
    t2 = b.mp(thm_syllogism(b, Not(Not(X)), X, Y), thm_dn_elim(b, X))
    return r_syll(b, t, t2)


# ---------------------------------------------------------------------------
# Conjunction


@theorem
def thm_conj_elim_l(b, X, Y):
    """X & Y > X"""
    a = b.axiom_instance("A1", {"p": Not(X), "q": Not(Y)})
    t = r_transpose_np(b, a)
    return b.defrw(t, ("l",), "and", "fold")


@theorem
def thm_conj_elim_r(b, X, Y):
    """X & Y > Y"""
    t = thm_add_p(b, Not(Y), Not(X))
    t = r_transpose_np(b, t)
    return b.defrw(t, ("l",), "and", "fold")


@theorem
def thm_or_assoc_right(b, X, Y, Z):
    """(X | Y) | Z > X | (Y | Z)"""
    goal_r = Or_(X, Or_(Y, Z))
    c1 = b.axiom_instance("A1", {"p": X, "q": Or_(Y, Z)})
    c2 = r_syll(b, b.axiom_instance("A1", {"p": Y, "q": Z}), thm_add_p(b, Or_(Y, Z), X))
    d1 = r_dilemma(b, c1, c2)
    c3 = r_syll(b, thm_add_p(b, Z, Y), thm_add_p(b, Or_(Y, Z), X))
    return r_dilemma(b, d1, c3)


@theorem
def thm_or_assoc_left(b, X, Y, Z):
    """X | (Y | Z) > (X | Y) | Z"""
    c1 = r_syll(
        b,
        b.axiom_instance("A1", {"p": X, "q": Y}),
        b.axiom_instance("A1", {"p": Or_(X, Y), "q": Z}),
    )
    c2 = r_syll(b, thm_add_p(b, Y, X), b.axiom_instance("A1", {"p": Or_(X, Y), "q": Z}))
    c3 = thm_add_p(b, Z, Or_(X, Y))
    d1 = r_dilemma(b, c2, c3)
    return r_dilemma(b, c1, d1)


@theorem
def thm_contraction(b, X, Y):
    """(X > (X > Y)) > (X > Y)"""
    a = thm_or_assoc_left(b, Not(X), Not(X), Y)
    a2 = b.axiom_instance("A2", {"p": Not(X)})
    ar = r_add_right(b, a2, Y)
    s = r_syll(b, a, ar)
    s = b.defrw(s, ("l", "r"), "imp", "fold")
    s = b.defrw(s, ("l",), "imp", "fold")
    return b.defrw(s, ("r",), "imp", "fold")


@theorem
def thm_expansion(b, X, Y):
    """(X > Y) > (X > (X > Y))"""
    return thm_adjoin_antecedent(b, Implies_(X, Y), X)


@theorem
def thm_exportation(b, X, Y, Z):
    """(X & Y > Z) > (X > (Y > Z))"""
    body = Or_(Not(X), Not(Y))
    dn = thm_dn_elim(b, body)
    ar = r_add_right(b, dn, Z)
    s = r_syll(b, ar, thm_or_assoc_right(b, Not(X), Not(Y), Z))
    s = b.defrw(s, ("r", "r"), "imp", "fold")
    s = b.defrw(s, ("r",), "imp", "fold")
    s = b.defrw(s, ("l", "l", "s"), "and", "fold")
    return b.defrw(s, ("l",), "imp", "fold")


@theorem
def thm_importation(b, X, Y, Z):
    """(X > (Y > Z)) > (X & Y > Z)"""
    body = Or_(Not(X), Not(Y))
    dn = thm_dn_intro(b, body)
    ar = r_add_right(b, dn, Z)
    s = r_syll(b, thm_or_assoc_left(b, Not(X), Not(Y), Z), ar)
    s = b.defrw(s, ("l", "r"), "imp", "fold")
    s = b.defrw(s, ("l",), "imp", "fold")
    s = b.defrw(s, ("r", "l", "s"), "and", "fold")
    return b.defrw(s, ("r",), "imp", "fold")


@theorem
def thm_commutation(b, X, Y, Z):
    """(X > (Y > Z)) > (Y > (X > Z))"""
    s1 = thm_or_assoc_left(b, Not(X), Not(Y), Z)
    a3 = b.axiom_instance("A3", {"p": Not(X), "q": Not(Y)})
    ar = r_add_right(b, a3, Z)
    s2 = thm_or_assoc_right(b, Not(Y), Not(X), Z)
    s = r_syll(b, r_syll(b, s1, ar), s2)
    s = b.defrw(s, ("l", "r"), "imp", "fold")
    s = b.defrw(s, ("l",), "imp", "fold")
    s = b.defrw(s, ("r", "r"), "imp", "fold")
    return b.defrw(s, ("r",), "imp", "fold")


def r_export(b, i):
    """From X & Y > Z conclude X > (Y > Z)."""
    conj, z = _implies(b.formula(i))
    x, y = _conj(conj)
    return b.mp(thm_exportation(b, x, y, z), i)


def r_import(b, i):
    """From X > (Y > Z) conclude X & Y > Z."""
    x, rest = _implies(b.formula(i))
    y, z = _implies(rest)
    return b.mp(thm_importation(b, x, y, z), i)


def r_commute(b, i):
    """From X > (Y > Z) conclude Y > (X > Z)."""
    x, rest = _implies(b.formula(i))
    y, z = _implies(rest)
    return b.mp(thm_commutation(b, x, y, z), i)


def r_adjoin(b, i, P):
    """From Q conclude P > Q."""
    q = b.formula(i)
    return b.mp(thm_adjoin_antecedent(b, q, P), i)


def r_adjoin_neg(b, i, Q):
    """From ~P conclude P > Q."""
    p = _neg(b.formula(i))
    return b.mp(thm_ex_falso(b, p, Q), i)


def r_adjoin_pos(b, i, Q):
    """From P conclude ~P > Q."""
    p = b.formula(i)
    c = r_commute(b, thm_ex_falso(b, p, Q))
    return b.mp(c, i)


@theorem
def thm_pairing(b, X, Y):
    """X > (Y > X & Y)"""
    return r_export(b, thm_identity(b, And_(X, Y)))


def r_product(b, i, j):
    """From X and Y conclude X & Y."""
    t = thm_pairing(b, b.formula(i), b.formula(j))
    return b.mp(b.mp(t, i), j)


@theorem
def thm_conj_comm(b, X, Y):
    """X & Y > Y & X"""
    a3 = b.axiom_instance("A3", {"p": Not(Y), "q": Not(X)})
    t = r_transpose(b, a3)
    t = b.defrw(t, ("l",), "and", "fold")
    return b.defrw(t, ("r",), "and", "fold")


def r_inversion(b, i):
    """From X & Y conclude Y & X."""
    x, y = _conj(b.formula(i))
    return b.mp(thm_conj_comm(b, x, y), i)


def r_compose(b, i, j):
    """From P > Q and P > S conclude P > Q & S."""
    p, q = _implies(b.formula(i))
    p2, s = _implies(b.formula(j))
    if p != p2:
        raise PreconditionViolated("composition premises need one antecedent")
    pr = thm_pairing(b, q, s)
    s1 = r_syll(b, i, pr)
    c = r_commute(b, s1)
    s2 = r_syll(b, j, c)
    return b.mp(thm_contraction(b, p, And_(q, s)), s2)


def r_mult(b, i, j):
    """From P > Q and R > S conclude P & R > Q & S."""
    p, q = _implies(b.formula(i))
    r, s = _implies(b.formula(j))
    s1 = r_syll(b, thm_conj_elim_l(b, p, r), i)
    s2 = r_syll(b, thm_conj_elim_r(b, p, r), j)
    return r_compose(b, s1, s2)


def r_mp_under(b, i, j):
    """From H > P and H > (P > Q) conclude H > Q."""
    h, p = _implies(b.formula(i))
    h2, rest = _implies(b.formula(j))
    p2, q = _implies(rest)
    if h != h2 or p != p2:
        raise PreconditionViolated("premises do not fit modus ponens under a hypothesis")
    c = r_commute(b, j)
    s = r_syll(b, i, c)
    return b.mp(thm_contraction(b, h, q), s)


def r_syll_under(b, i, j):
    """From H > (P > Q) and Q > R conclude H > (P > R)."""
    _, rest = _implies(b.formula(i))
    p, q = _implies(rest)
    q2, r = _implies(b.formula(j))
    if q != q2:
        raise PreconditionViolated("premises do not chain under the hypothesis")
    t = b.mp(thm_syllogism(b, q, r, p), j)
    return r_syll(b, i, t)


def r_syll_under_pre(b, i, j):
    """From H > (P > Q) and R > P conclude H > (R > Q)."""
    _, rest = _implies(b.formula(i))
    p, q = _implies(rest)
    r, p2 = _implies(b.formula(j))
    if p != p2:
        raise PreconditionViolated("premises do not chain under the hypothesis")
    t = b.mp(r_commute(b, thm_syllogism(b, p, q, r)), j)
    return r_syll(b, i, t)


def r_syll_under_both(b, i, j):
    """From H > (A > B) and H > (B > C) conclude H > (A > C)."""
    h, rest = _implies(b.formula(i))
    a, bb = _implies(rest)
    _, rest2 = _implies(b.formula(j))
    b2, c = _implies(rest2)
    if bb != b2:
        raise PreconditionViolated("premises do not chain under the hypothesis")
    comp = r_compose(b, i, j)
    return r_syll(b, comp, thm_syll_conj(b, a, bb, c))


@theorem
def thm_syll_exported(b, X, Y, Z):
    """(X > Y) > ((Y > Z) > (X > Z))"""
    return r_commute(b, thm_syllogism(b, Y, Z, X))


@theorem
def thm_syll_conj(b, X, Y, Z):
    """(X > Y) & (Y > Z) > (X > Z)"""
    return r_import(b, thm_syll_exported(b, X, Y, Z))


@theorem
def thm_ponendo(b, X, Y):
    """X & (X > Y) > Y"""
    el = thm_conj_elim_l(b, X, Implies_(X, Y))
    er = thm_conj_elim_r(b, X, Implies_(X, Y))
    return r_mp_under(b, el, er)


def r_equiv_intro(b, i, j):
    """From P > Q and Q > P conclude P = Q."""
    p, q = _implies(b.formula(i))
    q2, p2 = _implies(b.formula(j))
    if p != p2 or q != q2:
        raise PreconditionViolated("equivalence premises must be converse implications")
    pr = r_product(b, i, j)
    return b.defrw(pr, (), "equiv", "fold")


def r_equiv_elim_l(b, i):
    """From P = Q conclude P > Q."""
    p, q = _equiv(b.formula(i))
    e = b.defrw(i, (), "equiv", "expand")
    return b.mp(thm_conj_elim_l(b, Implies_(p, q), Implies_(q, p)), e)


def r_equiv_elim_r(b, i):
    """From P = Q conclude Q > P."""
    p, q = _equiv(b.formula(i))
    e = b.defrw(i, (), "equiv", "expand")
    return b.mp(thm_conj_elim_r(b, Implies_(p, q), Implies_(q, p)), e)


def r_equiv_neg(b, i):
    """From P = Q conclude ~P = ~Q."""
    l = r_equiv_elim_l(b, i)
    r = r_equiv_elim_r(b, i)
    return r_equiv_intro(b, r_transpose(b, r), r_transpose(b, l))


# ---------------------------------------------------------------------------
# Classical shape of disjunction, contradiction, reductio


@theorem
def thm_non_contradiction(b, X):
    """~(X & ~X)"""
    al = r_add_left(b, thm_dn_intro(b, X), Not(X))
    m = b.mp(al, thm_excluded_middle(b, X))
    d = b.mp(thm_dn_intro(b, Or_(Not(X), Not(Not(X)))), m)
    return b.defrw(d, ("s",), "and", "fold")


@theorem
def thm_tollendo_exported(b, X, Y):
    """X | Y > (~X > Y)"""
    ar = r_add_right(b, thm_dn_intro(b, X), Y)
    return b.defrw(ar, ("r",), "imp", "fold")


@theorem
def thm_classical_or(b, X, Y):
    """(~X > Y) > X | Y"""
    ar = r_add_right(b, thm_dn_elim(b, X), Y)
    return b.defrw(ar, ("l",), "imp", "fold")


@theorem
def thm_composition(b, P, Q, S):
    """(P > Q) & (P > S) > (P > Q & S)"""
    el = thm_conj_elim_l(b, Implies_(P, Q), Implies_(P, S))
    er = thm_conj_elim_r(b, Implies_(P, Q), Implies_(P, S))
    im1 = r_import(b, el)
    im2 = r_import(b, er)
    c = r_compose(b, im1, im2)
    return r_export(b, c)


@theorem
def thm_reductio(b, X, Y):
    """(X > Y) & (X > ~Y) > ~X"""
    comp = thm_composition(b, X, Y, Not(Y))
    tr = thm_transposition(b, X, And_(Y, Not(Y)))
    t = b.mp(r_commute(b, tr), thm_non_contradiction(b, Y))
    return r_syll(b, comp, t)


@theorem
def thm_self_refutation(b, X):
    """(X > ~X) > ~X"""
    a2 = b.axiom_instance("A2", {"p": Not(X)})
    return b.defrw(a2, ("l",), "imp", "fold")


@theorem
def thm_consequentia_mirabilis(b, X):
    """(~X > X) > X"""
    d = r_dilemma(b, thm_dn_elim(b, X), thm_identity(b, X))
    return b.defrw(d, ("l",), "imp", "fold")


@theorem
def thm_sum(b, X, Y, R):
    """(X > Y) > (X | R > Y | R)"""
    a4 = b.axiom_instance("A4", {"p": X, "q": Y, "r": R})
    a3a = b.axiom_instance("A3", {"p": X, "q": R})
    s1 = r_syll_under_pre(b, a4, a3a)
    a3b = b.axiom_instance("A3", {"p": R, "q": Y})
    return r_syll_under(b, s1, a3b)


@theorem
def thm_or_dilemma(b, X, Y, Z, W):
    """(X > Y) & (Z > W) > (X | Z > Y | W)"""
    h_l, h_r = Implies_(X, Y), Implies_(Z, W)
    el = thm_conj_elim_l(b, h_l, h_r)
    er = thm_conj_elim_r(b, h_l, h_r)
    s1 = r_syll(b, el, thm_sum(b, X, Y, Z))
    a4 = b.axiom_instance("A4", {"p": Z, "q": W, "r": Y})
    s2 = r_syll(b, er, a4)
    return r_syll_under_both(b, s1, s2)


@theorem
def thm_dilemma_conj(b, X, Y, Z):
    """(X > Z) & (Y > Z) > (X | Y > Z)"""
    d = thm_or_dilemma(b, X, Z, Y, Z)
    a2 = b.axiom_instance("A2", {"p": Z})
    return r_syll_under(b, d, a2)


@theorem
def thm_factor(b, X, Y, R):
    """(X > Y) > (X & R > Y & R)"""
    t1 = thm_transposition(b, X, Y)
    sm = thm_sum(b, Not(Y), Not(X), Not(R))
    s1 = r_syll(b, t1, sm)
    tr = thm_transposition(b, Or_(Not(Y), Not(R)), Or_(Not(X), Not(R)))
    s2 = r_syll(b, s1, tr)
    s2 = b.defrw(s2, ("r", "l"), "and", "fold")
    return b.defrw(s2, ("r", "r"), "and", "fold")


@theorem
def thm_mult_left(b, R, S, Q):
    """(R > S) > (Q & R > Q & S)"""
    t1 = thm_transposition(b, R, S)
    a4 = b.axiom_instance("A4", {"p": Not(S), "q": Not(R), "r": Not(Q)})
    s1 = r_syll(b, t1, a4)
    tr = thm_transposition(b, Or_(Not(Q), Not(S)), Or_(Not(Q), Not(R)))
    s2 = r_syll(b, s1, tr)
    s2 = b.defrw(s2, ("r", "l"), "and", "fold")
    return b.defrw(s2, ("r", "r"), "and", "fold")


@theorem
def thm_praeclarum(b, P, Q, R, S):
    """(P > Q) & (R > S) > (P & R > Q & S)"""
    h_l, h_r = Implies_(P, Q), Implies_(R, S)
    el = thm_conj_elim_l(b, h_l, h_r)
    er = thm_conj_elim_r(b, h_l, h_r)
    s1 = r_syll(b, el, thm_factor(b, P, Q, R))
    s2 = r_syll(b, er, thm_mult_left(b, R, S, Q))
    return r_syll_under_both(b, s1, s2)


@theorem
def thm_conj_idem(b, X):
    """X > X & X"""
    a2 = b.axiom_instance("A2", {"p": Not(X)})
    t = r_transpose_pn(b, a2)
    return b.defrw(t, ("r",), "and", "fold")


@theorem
def thm_conj_assoc_right(b, X, Y, Z):
    """(X & Y) & Z > X & (Y & Z)"""
    el = thm_conj_elim_l(b, And_(X, Y), Z)
    hx = r_syll(b, el, thm_conj_elim_l(b, X, Y))
    hy = r_syll(b, el, thm_conj_elim_r(b, X, Y))
    hz = thm_conj_elim_r(b, And_(X, Y), Z)
    c1 = r_compose(b, hy, hz)
    return r_compose(b, hx, c1)


@theorem
def thm_conj_assoc_left(b, X, Y, Z):
    """X & (Y & Z) > (X & Y) & Z"""
    er = thm_conj_elim_r(b, X, And_(Y, Z))
    hx = thm_conj_elim_l(b, X, And_(Y, Z))
    hy = r_syll(b, er, thm_conj_elim_l(b, Y, Z))
    hz = r_syll(b, er, thm_conj_elim_r(b, Y, Z))
    c1 = r_compose(b, hx, hy)
    return r_compose(b, c1, hz)


@theorem
def thm_tollendo_tollens(b, X, Y):
    """(X > Y) & ~Y > ~X"""
    el = thm_conj_elim_l(b, Implies_(X, Y), Not(Y))
    er = thm_conj_elim_r(b, Implies_(X, Y), Not(Y))
    s = r_syll(b, el, thm_transposition(b, X, Y))
    return r_mp_under(b, er, s)


@theorem
def thm_tollendo_ponens(b, X, Y):
    """(X | Y) & ~Y > X"""
    el = thm_conj_elim_l(b, Or_(X, Y), Not(Y))
    er = thm_conj_elim_r(b, Or_(X, Y), Not(Y))
    a3 = b.axiom_instance("A3", {"p": X, "q": Y})
    s = r_syll(b, r_syll(b, el, a3), thm_tollendo_exported(b, Y, X))
    return r_mp_under(b, er, s)


@theorem
def thm_tollendo_ponens_alt(b, X, Y):
    """(X | Y) & ~X > Y"""
    el = thm_conj_elim_l(b, Or_(X, Y), Not(X))
    er = thm_conj_elim_r(b, Or_(X, Y), Not(X))
    s = r_syll(b, el, thm_tollendo_exported(b, X, Y))
    return r_mp_under(b, er, s)


@theorem
def thm_export_transposition(b, X, Y, Z):
    """(X & Y > Z) > (X & ~Z > ~Y)"""
    ex = thm_exportation(b, X, Y, Z)
    s1 = r_syll_under(b, ex, thm_transposition(b, Y, Z))
    im = thm_importation(b, X, Not(Z), Not(Y))
    return r_syll(b, s1, im)


# ---------------------------------------------------------------------------
# Equivalences


@theorem
def thm_dist_and_or(b, X, Y, Z):
    """X & (Y | Z) = X & Y | X & Z"""
    el = thm_conj_elim_l(b, X, Or_(Y, Z))
    er = thm_conj_elim_r(b, X, Or_(Y, Z))
    c1 = r_commute(b, thm_pairing(b, X, Y))
    a1 = b.axiom_instance("A1", {"p": And_(X, Y), "q": And_(X, Z)})
    s1 = r_syll_under(b, c1, a1)
    c2 = r_commute(b, thm_pairing(b, X, Z))
    ap = thm_add_p(b, And_(X, Z), And_(X, Y))
    s2 = r_syll_under(b, c2, ap)
    d = r_dilemma(b, s1, s2)
    s3 = r_syll(b, er, d)
    d1 = r_mp_under(b, el, s3)
    m1 = r_mult(b, thm_identity(b, X), b.axiom_instance("A1", {"p": Y, "q": Z}))
    m2 = r_mult(b, thm_identity(b, X), thm_add_p(b, Z, Y))
    d2 = r_dilemma(b, m1, m2)
    return r_equiv_intro(b, d1, d2)


@theorem
def thm_dist_or_and(b, X, Y, Z):
    """X | Y & Z = (X | Y) & (X | Z)"""
    al1 = r_add_left(b, thm_conj_elim_l(b, Y, Z), X)
    al2 = r_add_left(b, thm_conj_elim_r(b, Y, Z), X)
    d1 = r_compose(b, al1, al2)
    el = thm_conj_elim_l(b, Or_(X, Y), Or_(X, Z))
    er = thm_conj_elim_r(b, Or_(X, Y), Or_(X, Z))
    s1 = r_syll(b, el, thm_tollendo_exported(b, X, Y))
    s2 = r_syll(b, er, thm_tollendo_exported(b, X, Z))
    i1 = r_import(b, s1)
    i2 = r_import(b, s2)
    c = r_compose(b, i1, i2)
    ex = r_export(b, c)
    d2 = r_syll(b, ex, thm_classical_or(b, X, And_(Y, Z)))
    return r_equiv_intro(b, d1, d2)


@theorem
def thm_demorgan_and(b, X, Y):
    """~(X & Y) = ~X | ~Y"""
    d1 = b.defrw(thm_dn_elim(b, Or_(Not(X), Not(Y))), ("l", "s"), "and", "fold")
    d2 = b.defrw(thm_dn_intro(b, Or_(Not(X), Not(Y))), ("r", "s"), "and", "fold")
    return r_equiv_intro(b, d1, d2)


@theorem
def thm_demorgan_or(b, X, Y):
    """~(X | Y) = ~X & ~Y"""
    ab1 = r_add_both(b, thm_dn_elim(b, X), thm_dn_elim(b, Y))
    d1 = b.defrw(r_transpose(b, ab1), ("r",), "and", "fold")
    ab2 = r_add_both(b, thm_dn_intro(b, X), thm_dn_intro(b, Y))
    d2 = b.defrw(r_transpose(b, ab2), ("l",), "and", "fold")
    return r_equiv_intro(b, d1, d2)


@theorem
def thm_dn_equiv(b, X):
    """~~X = X"""
    return r_equiv_intro(b, thm_dn_elim(b, X), thm_dn_intro(b, X))


@theorem
def thm_identity_equiv(b, X):
    """X = X"""
    return r_equiv_intro(b, thm_identity(b, X), thm_identity(b, X))


@theorem
def thm_transposition_equiv(b, X, Y):
    """(X > Y) = (~Y > ~X)"""
    return r_equiv_intro(b, thm_transposition(b, X, Y), thm_transposition_nn(b, Y, X))


@theorem
def thm_or_comm_equiv(b, X, Y):
    """X | Y = Y | X"""
    a = b.axiom_instance("A3", {"p": X, "q": Y})
    c = b.axiom_instance("A3", {"p": Y, "q": X})
    return r_equiv_intro(b, a, c)


@theorem
def thm_and_comm_equiv(b, X, Y):
    """X & Y = Y & X"""
    return r_equiv_intro(b, thm_conj_comm(b, X, Y), thm_conj_comm(b, Y, X))


@theorem
def thm_or_assoc_equiv(b, X, Y, Z):
    """(X | Y) | Z = X | (Y | Z)"""
    return r_equiv_intro(b, thm_or_assoc_right(b, X, Y, Z), thm_or_assoc_left(b, X, Y, Z))


@theorem
def thm_and_assoc_equiv(b, X, Y, Z):
    """(X & Y) & Z = X & (Y & Z)"""
    return r_equiv_intro(b, thm_conj_assoc_right(b, X, Y, Z), thm_conj_assoc_left(b, X, Y, Z))


@theorem
def thm_excluded_middle_comm(b, X):
    """X | ~X"""
    a3 = b.axiom_instance("A3", {"p": Not(X), "q": X})
    return b.mp(a3, thm_excluded_middle(b, X))


# ---------------------------------------------------------------------------
# The derived-rule registry used by proof scripts


def _need(premises, n, name):
    if len(premises) != n:
        raise PreconditionViolated(f"{name} takes {n} premise step(s)")


def _inst(inst, key, name):
    if key not in inst:
        raise PreconditionViolated(f"{name} needs an instantiation for {key}")
    return inst[key]


def _rule0(fn, name, n):
    def use(b, premises, inst):
        _need(premises, n, name)
        if inst:
            raise PreconditionViolated(f"{name} takes no instantiation")
        return fn(b, *premises)

    return use


def _rule1(fn, name, key):
    def use(b, premises, inst):
        _need(premises, 1, name)
        return fn(b, premises[0], _inst(inst, key, name))

    return use


DERIVED_RULES = {
    "syll": _rule0(r_syll, "syll", 2),
    "add-left": _rule1(r_add_left, "add-left", "r"),
    "add-right": _rule1(r_add_right, "add-right", "r"),
    "add-both": _rule0(r_add_both, "add-both", 2),
    "dilemma": _rule0(r_dilemma, "dilemma", 2),
    "transpose": _rule0(r_transpose, "transpose", 1),
    "transpose-pn": _rule0(r_transpose_pn, "transpose-pn", 1),
    "transpose-np": _rule0(r_transpose_np, "transpose-np", 1),
    "transpose-nn": _rule0(r_transpose_nn, "transpose-nn", 1),
    "adjoin": _rule1(r_adjoin, "adjoin", "p"),
    "adjoin-neg": _rule1(r_adjoin_neg, "adjoin-neg", "q"),
    "adjoin-pos": _rule1(r_adjoin_pos, "adjoin-pos", "q"),
    "export": _rule0(r_export, "export", 1),
    "import": _rule0(r_import, "import", 1),
    "commute": _rule0(r_commute, "commute", 1),
    "product": _rule0(r_product, "product", 2),
    "inversion": _rule0(r_inversion, "inversion", 1),
    "mult": _rule0(r_mult, "mult", 2),
    "compose": _rule0(r_compose, "compose", 2),
    "syll-under": _rule0(r_syll_under, "syll-under", 2),
    "mp-under": _rule0(r_mp_under, "mp-under", 2),
    "equiv-intro": _rule0(r_equiv_intro, "equiv-intro", 2),
    "equiv-elim-l": _rule0(r_equiv_elim_l, "equiv-elim-l", 1),
    "equiv-elim-r": _rule0(r_equiv_elim_r, "equiv-elim-r", 1),
    "equiv-neg": _rule0(r_equiv_neg, "equiv-neg", 1),
}

_RULE_ALIASES = {
    "Syllogism4R": "syll",
    "AddLeft5R": "add-left",
    "AddRight51R": "add-right",
    "AddBoth7R": "add-both",
    "Dilemma8R": "dilemma",
    "Transpositions9R": "transpose",
    "Transpositions91R": "transpose-pn",
    "Transpositions92R": "transpose-np",
    "Transpositions93R": "transpose-nn",
    "AdjoinHyp10R": "adjoin",
    "AdjoinHyp101R": "adjoin-neg",
    "AdjoinHyp102R": "adjoin-pos",
    "ExportImportCommute11": "export",
    "ExportImportCommute111": "import",
    "ExportImportCommute112": "commute",
    "ExportImportCommute11R": "export",
    "ExportImportCommute111R": "import",
    "ExportImportCommute112R": "commute",
    "Product12R": "product",
    "ProductInversion": "inversion",
    "Multiplication13R": "mult",
    "Composition132R": "compose",
    "SyllogismUnderAssumption14R": "syll-under",
}

for _alias, _target in _RULE_ALIASES.items():
    DERIVED_RULES[_alias] = DERIVED_RULES[_target]


# ---------------------------------------------------------------------------
# Theorem library

_LIBRARY_SPECS = [
    ("identity", thm_identity, "p -> p", 1),
    ("identity-equiv", thm_identity_equiv, "p <-> p", 1),
    ("excluded-middle", thm_excluded_middle, "~p | p", 1),
    ("excluded-middle-comm", thm_excluded_middle_comm, "p | ~p", 1),
    ("non-contradiction", thm_non_contradiction, "~(p & ~p)", 1),
    ("double-negation-intro", thm_dn_intro, "p -> ~~p", 1),
    ("double-negation-elim", thm_dn_elim, "~~p -> p", 1),
    ("double-negation-equiv", thm_dn_equiv, "~~p <-> p", 1),
    ("syllogism", thm_syllogism, "(p -> q) -> ((r -> p) -> (r -> q))", 3),
    ("syllogism-exported", thm_syll_exported, "(p -> q) -> ((q -> r) -> (p -> r))", 3),
    ("syllogism-conj", thm_syll_conj, "(p -> q) & (q -> r) -> (p -> r)", 3),
    ("or-intro-right", thm_add_p, "p -> q | p", 2),
    ("adjoin-antecedent", thm_adjoin_antecedent, "p -> (q -> p)", 2),
    ("ex-falso", thm_ex_falso, "~p -> (p -> q)", 2),
    ("expansion", thm_expansion, "(p -> q) -> (p -> (p -> q))", 2),
    ("contraction", thm_contraction, "(p -> (p -> q)) -> (p -> q)", 2),
    ("transposition", thm_transposition, "(p -> q) -> (~q -> ~p)", 2),
    ("transposition-pn", thm_transposition_pn, "(p -> ~q) -> (q -> ~p)", 2),
    ("transposition-np", thm_transposition_np, "(~p -> q) -> (~q -> p)", 2),
    ("transposition-nn", thm_transposition_nn, "(~p -> ~q) -> (q -> p)", 2),
    ("transposition-equiv", thm_transposition_equiv, "(p -> q) <-> (~q -> ~p)", 2),
    ("export-transposition", thm_export_transposition, "(p & q -> r) -> (p & ~r -> ~q)", 3),
    ("conj-elim-left", thm_conj_elim_l, "p & q -> p", 2),
    ("conj-elim-right", thm_conj_elim_r, "p & q -> q", 2),
    ("conj-idem", thm_conj_idem, "p -> p & p", 1),
    ("conj-comm", thm_conj_comm, "p & q -> q & p", 2),
    ("and-comm-equiv", thm_and_comm_equiv, "p & q <-> q & p", 2),
    ("or-comm-equiv", thm_or_comm_equiv, "p | q <-> q | p", 2),
    ("or-assoc-right", thm_or_assoc_right, "(p | q) | r -> p | (q | r)", 3),
    ("or-assoc-left", thm_or_assoc_left, "p | (q | r) -> (p | q) | r", 3),
    ("or-assoc-equiv", thm_or_assoc_equiv, "(p | q) | r <-> p | (q | r)", 3),
    ("and-assoc-right", thm_conj_assoc_right, "(p & q) & r -> p & (q & r)", 3),
    ("and-assoc-left", thm_conj_assoc_left, "p & (q & r) -> (p & q) & r", 3),
    ("and-assoc-equiv", thm_and_assoc_equiv, "(p & q) & r <-> p & (q & r)", 3),
    ("exportation", thm_exportation, "(p & q -> r) -> (p -> (q -> r))", 3),
    ("importation", thm_importation, "(p -> (q -> r)) -> (p & q -> r)", 3),
    ("commutation", thm_commutation, "(p -> (q -> r)) -> (q -> (p -> r))", 3),
    ("pairing", thm_pairing, "p -> (q -> p & q)", 2),
    ("ponendo-ponens", thm_ponendo, "p & (p -> q) -> q", 2),
    ("tollendo-tollens", thm_tollendo_tollens, "(p -> q) & ~q -> ~p", 2),
    ("tollendo-ponens", thm_tollendo_ponens, "(p | q) & ~q -> p", 2),
    ("tollendo-ponens-alt", thm_tollendo_ponens_alt, "(p | q) & ~p -> q", 2),
    ("tollendo-exported", thm_tollendo_exported, "p | q -> (~p -> q)", 2),
    ("classical-or-intro", thm_classical_or, "(~p -> q) -> p | q", 2),
    ("sum", thm_sum, "(p -> q) -> (p | r -> q | r)", 3),
    ("factor", thm_factor, "(p -> q) -> (p & r -> q & r)", 3),
    ("mult-left", thm_mult_left, "(p -> q) -> (r & p -> r & q)", 3),
    ("dilemma-conj", thm_dilemma_conj, "(p -> r) & (q -> r) -> (p | q -> r)", 3),
    ("dilemma-or", thm_or_dilemma, "(p -> q) & (r -> s) -> (p | r -> q | s)", 4),
    ("praeclarum", thm_praeclarum, "(p -> q) & (r -> s) -> (p & r -> q & s)", 4),
    ("composition", thm_composition, "(p -> q) & (p -> r) -> (p -> q & r)", 3),
    ("reductio", thm_reductio, "(p -> q) & (p -> ~q) -> ~p", 2),
    ("self-refutation", thm_self_refutation, "(p -> ~p) -> ~p", 1),
    ("consequentia-mirabilis", thm_consequentia_mirabilis, "(~p -> p) -> p", 1),
    ("demorgan-and", thm_demorgan_and, "~(p & q) <-> ~p | ~q", 2),
    ("demorgan-or", thm_demorgan_or, "~(p | q) <-> ~p & ~q", 2),
    ("dist-and-or", thm_dist_and_or, "p & (q | r) <-> p & q | p & r", 3),
    ("dist-or-and", thm_dist_or_and, "p | q & r <-> (p | q) & (p | r)", 3),
]

LIBRARY_FORMULAS = {name: parse_infix(text) for name, _, text, _ in _LIBRARY_SPECS}


def _library_args(name, arity):
    return tuple(Var(v) for v in _CANON[:arity])


def build_theorem(builder, name):
    """Derive a library theorem on the given builder; returns its index."""
    for entry, fn, _, arity in _LIBRARY_SPECS:
        if entry == name:
            idx = fn(builder, *_library_args(name, arity))
            if builder.formula(idx) != LIBRARY_FORMULAS[name]:
                raise PreconditionViolated(f"recipe for {name} derived the wrong formula")
            return idx
    raise KeyError(name)


def build_theorem_instance(builder, name, mapping):
    """Derive a library theorem with p, q, r replaced as given.

    Variables left out of the mapping stay themselves.  Works on any
    builder, in particular one whose formulas range beyond the
    propositional language.
    """
    for entry, fn, _, arity in _LIBRARY_SPECS:
        if entry == name:
            canon = _CANON[:arity]
            for v in mapping:
                if v not in canon:
                    raise PreconditionViolated(f"theorem {name} has no variable {v}")
            return fn(builder, *(mapping.get(v, Var(v)) for v in canon))
    raise KeyError(name)


def theorem_library():
    """name -> Proof for every library theorem."""
    from .hilbert import Proof, ProofBuilder

    out = {}
    for name, _, _, _ in _LIBRARY_SPECS:
        b = ProofBuilder()
        idx = build_theorem(b, name)
        out[name] = Proof(tuple(b.proof().steps[: idx + 1]))
    return out
