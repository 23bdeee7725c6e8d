"""Predicate-logic formulas under a strict variable discipline.

Three kinds of letters: propositional variables (bare names), functional
variables (applied to arguments, as in phi(x)), and individual variables
(quantified or appearing as arguments).  A name plays one role only.
Nested quantifiers bear distinct names and no name occurs both free and
bound; this keeps every substitution check purely syntactic.

ASCII syntax extends the propositional one with quantifier prefixes
"(x)" and "(Ex)", scope brackets [...], and atoms "phi(x,y)".  A
quantifier reaches only the unit that follows it, so scope brackets may
be dropped exactly when the scope is an atom or begins with ~ or
another quantifier.
"""

from dataclasses import dataclass
from typing import Union

from .errors import (
    AmbiguityError,
    ArityMismatch,
    BoundClash,
    CaptureError,
    FormulaSyntaxError,
    NotFree,
    VariableOverlap,
    WellFormednessError,
)
from .props import Bin, Connective, Not, Var


@dataclass(eq=True, frozen=True)
class Atom:
    pred: str
    args: tuple


@dataclass(eq=True, frozen=True)
class Forall:
    var: str
    body: "PredFormula"


@dataclass(eq=True, frozen=True)
class Exists:
    var: str
    body: "PredFormula"


PredFormula = Union[Var, Atom, Not, Bin, Forall, Exists]

_QUANT = (Forall, Exists)


# ---------------------------------------------------------------- analysis


def _scan(f, prop, func, free, bound, active):
    if isinstance(f, Var):
        prop.add(f.name)
    elif isinstance(f, Atom):
        arity = func.setdefault(f.pred, len(f.args))
        if arity != len(f.args):
            raise WellFormednessError(
                f"functional variable {f.pred} used with arity {arity} and {len(f.args)}"
            )
        for a in f.args:
            if a in active:
                active[a] = True
            else:
                free.add(a)
    elif isinstance(f, Not):
        _scan(f.sub, prop, func, free, bound, active)
    elif isinstance(f, Bin):
        _scan(f.left, prop, func, free, bound, active)
        _scan(f.right, prop, func, free, bound, active)
    elif isinstance(f, _QUANT):
        if f.var in active:
            raise WellFormednessError(
                f"nested quantifiers reuse the bound variable {f.var}"
            )
        active[f.var] = False
        bound.add(f.var)
        _scan(f.body, prop, func, free, bound, active)
        if not active.pop(f.var):
            raise WellFormednessError(
                f"quantifier binds {f.var} but its scope never uses it"
            )
    else:
        raise WellFormednessError(f"not a predicate formula: {f!r}")


def well_formed(f):
    """Check the variable discipline; returns f, or raises
    WellFormednessError."""
    prop, func, free, bound = set(), {}, set(), set()
    _scan(f, prop, func, free, bound, {})
    both = free & bound
    if both:
        name = sorted(both)[0]
        raise WellFormednessError(f"{name} occurs both free and bound")
    ind = free | bound
    for name in sorted(prop & ind):
        raise WellFormednessError(f"{name} used as propositional and individual variable")
    for name in sorted(set(func) & ind):
        raise WellFormednessError(f"{name} used as functional and individual variable")
    for name in sorted(prop & set(func)):
        raise WellFormednessError(f"{name} used as propositional and functional variable")
    return f


def _analyze(f):
    prop, func, free, bound = set(), {}, set(), set()
    _scan(f, prop, func, free, bound, {})
    return prop, func, free, bound


def prop_vars(f):
    return frozenset(_analyze(f)[0])


def functional_arities(f):
    """name -> arity for every functional variable in f."""
    return dict(_analyze(f)[1])


def free_individual_vars(f):
    return frozenset(_analyze(f)[2])


def bound_vars(f):
    return frozenset(_analyze(f)[3])


def all_names(f):
    """Every name occurring in f, whatever its role."""
    prop, func, free, bound = _analyze(f)
    return frozenset(prop | set(func) | free | bound)


@dataclass(eq=True, frozen=True)
class QuantifierScope:
    var: str
    kind: str
    path: str
    scope: "PredFormula"


@dataclass(eq=True, frozen=True)
class ScopeReport:
    quantifiers: tuple
    free: frozenset
    bound: frozenset


def scope_report(f):
    """List every quantifier with its path and scope, plus the free and
    bound variable sets."""
    found = []

    def walk(g, path):
        if isinstance(g, Not):
            walk(g.sub, path + ("s",))
        elif isinstance(g, Bin):
            walk(g.left, path + ("l",))
            walk(g.right, path + ("r",))
        elif isinstance(g, _QUANT):
            kind = "forall" if isinstance(g, Forall) else "exists"
            found.append(
                QuantifierScope(g.var, kind, ".".join(path) if path else "-", g.body)
            )
            walk(g.body, path + ("b",))

    walk(f, ())
    return ScopeReport(tuple(found), free_individual_vars(f), bound_vars(f))


# ---------------------------------------------------------------- parsing

_UNIT_STARTERS = ("(", "[", "~")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "-":
            if text.startswith("->", i):
                tokens.append(("->", i))
                i += 2
                continue
            raise FormulaSyntaxError("stray '-'", i)
        if c == "<":
            if text.startswith("<->", i):
                tokens.append(("<->", i))
                i += 3
                continue
            raise FormulaSyntaxError("stray '<'", i)
        if c in "()[]~&|^/,":
            tokens.append((c, i))
            i += 1
            continue
        if c.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident:" + text[i:j], i))
            i = j
            continue
        raise FormulaSyntaxError(f"unexpected character {c!r}", i)
    return tokens


class _PredParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead=0):
        k = self.pos + ahead
        return self.tokens[k][0] if k < len(self.tokens) else None

    def here(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok[0]

    def parse(self):
        f = self.formula()
        if self.pos != len(self.tokens):
            raise FormulaSyntaxError("trailing input", self.here())
        return f

    def formula(self):
        left = self.disj()
        tok = self.peek()
        if tok in ("->", "<->", "^", "/"):
            self.take()
            right = self.disj()
            nxt = self.peek()
            if nxt in ("->", "<->", "^", "/"):
                raise AmbiguityError(
                    f"'{tok}' and '{nxt}' have equal force; parenthesize", self.here()
                )
            conn = {
                "->": Connective.IMPLIES,
                "<->": Connective.EQUIV,
                "^": Connective.XOR,
                "/": Connective.SHEFFER,
            }[tok]
            return Bin(conn, left, right)
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Bin(Connective.OR, f, self.conj())
        return f

    def conj(self):
        f = self.neg()
        while self.peek() == "&":
            self.take()
            f = Bin(Connective.AND, f, self.neg())
        return f

    def neg(self):
        if self.peek() == "~":
            self.take()
            return Not(self.neg())
        return self.unit()

    def _quantifier_ahead(self):
        """Does a quantifier prefix start here?  A parenthesized list of
        identifiers counts only when a unit follows, so that "(p) -> q"
        stays a grouping while "(x) phi(x)" binds x."""
        if self.peek() != "(":
            return None
        k, names = 1, []
        while True:
            tok = self.peek(k)
            if tok is None or not tok.startswith("ident:"):
                return None
            names.append(tok[len("ident:"):])
            k += 1
            tok = self.peek(k)
            if tok == ",":
                k += 1
                continue
            if tok == ")":
                k += 1
                break
            return None
        first = names[0]
        exists = len(first) > 1 and first[0] == "E"
        if exists:
            names[0] = first[1:]
        follower = self.peek(k)
        if not exists and not (
            follower in _UNIT_STARTERS or (follower or "").startswith("ident:")
        ):
            return None
        return k, names, exists

    def unit(self):
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", self.here())
        quant = self._quantifier_ahead()
        if quant is not None:
            width, names, exists = quant
            at = self.here()
            self.pos += width
            if self.peek() is None:
                raise FormulaSyntaxError("quantifier needs a scope", self.here())
            body = self.neg()
            ctor = Exists if exists else Forall
            for name in reversed(names):
                if not name:
                    raise FormulaSyntaxError("empty quantifier variable", at)
                body = ctor(name, body)
            return body
        if tok == "(":
            self.take()
            f = self.formula()
            if self.peek() != ")":
                raise FormulaSyntaxError("expected ')'", self.here())
            self.take()
            return f
        if tok == "[":
            self.take()
            f = self.formula()
            if self.peek() != "]":
                raise FormulaSyntaxError("expected ']'", self.here())
            self.take()
            return f
        if tok.startswith("ident:"):
            name = tok[len("ident:"):]
            self.take()
            if self.peek() == "(":
                self.take()
                args = []
                while True:
                    arg = self.peek()
                    if arg is None or not arg.startswith("ident:"):
                        raise FormulaSyntaxError("expected an argument name", self.here())
                    args.append(arg[len("ident:"):])
                    self.take()
                    nxt = self.peek()
                    if nxt == ",":
                        self.take()
                        continue
                    if nxt == ")":
                        self.take()
                        break
                    raise FormulaSyntaxError("expected ',' or ')'", self.here())
                return Atom(name, tuple(args))
            return Var(name)
        raise FormulaSyntaxError(f"unexpected token {tok!r}", self.here())


def parse_pred(text):
    """Parse the ASCII predicate syntax and check well-formedness."""
    return well_formed(_PredParser(text).parse())


# ---------------------------------------------------------------- printing


def _level(f):
    if isinstance(f, (Var, Atom) + _QUANT):
        return 5
    if isinstance(f, Not):
        return 4
    if f.conn is Connective.AND:
        return 3
    if f.conn is Connective.OR:
        return 2
    return 1


def _prefix(f):
    return ("(E" if isinstance(f, Exists) else "(") + f.var + ")"


def print_pred(f, mode="minimal"):
    """Render a formula; mode is 'minimal' or 'full'.

    Minimal mode drops scope brackets when the scope is atomic or
    begins with ~ or a quantifier, and parenthesizes connectives as the
    propositional printer does.
    """
    if mode == "full":
        return _print_full(f)
    if mode != "minimal":
        raise ValueError(f"unknown mode {mode!r}")
    return _print_min(f, 1, False)


def _print_min(f, need, strict):
    lvl = _level(f)
    wrap = lvl < need or (strict and lvl == need)
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Atom):
        return f.pred + "(" + ",".join(f.args) + ")"
    if isinstance(f, _QUANT):
        if isinstance(f.body, (Atom, Var, Not) + _QUANT):
            return _prefix(f) + _print_min(f.body, 4, False)
        return _prefix(f) + "[" + _print_min(f.body, 1, False) + "]"
    if isinstance(f, Not):
        body = "~" + _print_min(f.sub, 4, False)
    elif f.conn is Connective.AND:
        body = _print_min(f.left, 3, False) + " & " + _print_min(f.right, 3, True)
    elif f.conn is Connective.OR:
        body = _print_min(f.left, 2, False) + " | " + _print_min(f.right, 2, True)
    else:
        body = (
            _print_min(f.left, 2, False)
            + f" {f.conn.value} "
            + _print_min(f.right, 2, False)
        )
    return f"({body})" if wrap else body


def _print_full(f):
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Atom):
        return f.pred + "(" + ",".join(f.args) + ")"
    if isinstance(f, _QUANT):
        if isinstance(f.body, (Atom, Var)):
            return _prefix(f) + _print_full(f.body)
        return _prefix(f) + "[" + _print_full(f.body) + "]"
    if isinstance(f, Not):
        return "~" + _print_full(f.sub)
    return f"({_print_full(f.left)} {f.conn.value} {_print_full(f.right)})"


# ---------------------------------------------------------------- substitution


def instantiate_pattern(f, mapping):
    """Replace free individual variables per mapping (name -> name).

    Purely positional; callers are responsible for capture checks.
    """

    def walk(g, shadowed):
        if isinstance(g, Var):
            return g
        if isinstance(g, Atom):
            return Atom(
                g.pred,
                tuple(mapping.get(a, a) if a not in shadowed else a for a in g.args),
            )
        if isinstance(g, Not):
            return Not(walk(g.sub, shadowed))
        if isinstance(g, Bin):
            return Bin(g.conn, walk(g.left, shadowed), walk(g.right, shadowed))
        return type(g)(g.var, walk(g.body, shadowed | {g.var}))

    return walk(f, frozenset())


def rename_bound(f, old, new):
    """Rename the bound variable old to new (an alpha-variant).

    A formula without a quantifier on old is returned unchanged.  The
    new name must not occur within any renamed scope, and the result
    must stay well-formed; otherwise CaptureError.
    """
    if old == new:
        return f
    if old not in bound_vars(f):
        return f

    def walk(g, inside):
        if isinstance(g, Var):
            return g
        if isinstance(g, Atom):
            if inside:
                return Atom(g.pred, tuple(new if a == old else a for a in g.args))
            return g
        if isinstance(g, Not):
            return Not(walk(g.sub, inside))
        if isinstance(g, Bin):
            return Bin(g.conn, walk(g.left, inside), walk(g.right, inside))
        if g.var == old:
            scope_names = all_names(g.body) | {g.var}
            if new in scope_names:
                raise CaptureError(f"renaming {old} to {new} would capture {new}")
            return type(g)(new, walk(g.body, True))
        return type(g)(g.var, walk(g.body, inside))

    out = walk(f, False)
    try:
        well_formed(out)
    except WellFormednessError as exc:
        raise CaptureError(f"renaming {old} to {new}: {exc}") from None
    return out


def subst_free(f, var, new_var):
    """Replace every free occurrence of the individual variable var by
    new_var.  var must not be bound (NotFree) and new_var must not occur
    as a bound variable (BoundClash)."""
    if var == new_var:
        return f
    bnd = bound_vars(f)
    if var in bnd:
        raise NotFree(f"{var} occurs bound, not free")
    if new_var in bnd:
        raise BoundClash(f"{new_var} occurs as a bound variable")
    if var not in free_individual_vars(f):
        return f
    out = instantiate_pattern(f, {var: new_var})
    return well_formed(out)


def subst_prop_var(f, name, replacement):
    """Replace the propositional variable name by a formula.

    The replacement may share no name whatsoever with f (apart from the
    variable being replaced); VariableOverlap reports an offender.
    """
    if name not in prop_vars(f):
        return f
    shared = sorted((all_names(f) - {name}) & all_names(replacement))
    if shared:
        raise VariableOverlap(shared[0])

    def walk(g):
        if isinstance(g, Var):
            return replacement if g.name == name else g
        if isinstance(g, Atom):
            return g
        if isinstance(g, Not):
            return Not(walk(g.sub))
        if isinstance(g, Bin):
            return Bin(g.conn, walk(g.left), walk(g.right))
        return type(g)(g.var, walk(g.body))

    return well_formed(walk(f))


def subst_func_var(f, name, params, pattern):
    """Replace every atom name(t...) by the pattern instantiated at t...

    params lists the pattern's argument places in order.  The pattern's
    other names must be disjoint from f's names (VariableOverlap); the
    pattern must not bind a parameter, and its arity must agree with the
    atom's (ArityMismatch).
    """
    params = tuple(params)
    arities = functional_arities(f)
    if name not in arities:
        return f
    if arities[name] != len(params):
        raise ArityMismatch(
            f"{name} has arity {arities[name]}, pattern takes {len(params)}"
        )
    if set(params) & bound_vars(pattern):
        raise WellFormednessError("pattern binds one of its own parameters")
    extra = sorted((all_names(pattern) - set(params)) & all_names(f))
    if extra:
        raise VariableOverlap(extra[0])

    def walk(g):
        if isinstance(g, Var):
            return g
        if isinstance(g, Atom):
            if g.pred == name:
                return instantiate_pattern(pattern, dict(zip(params, g.args)))
            return g
        if isinstance(g, Not):
            return Not(walk(g.sub))
        if isinstance(g, Bin):
            return Bin(g.conn, walk(g.left), walk(g.right))
        return type(g)(g.var, walk(g.body))

    return well_formed(walk(f))
