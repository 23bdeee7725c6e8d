"""Two-valued semantics: evaluation, truth tables, normal forms, closures.

Truth-table row order is fixed everywhere: the leftmost variable is the
most significant bit and T precedes F, so row 0 is the all-true
assignment.  Counterexamples are reported from the first falsifying row
in that order.
"""

import itertools
from collections import namedtuple
from dataclasses import dataclass

from . import props
from .config import DEFAULT
from .errors import ResourceLimit, UnboundVariable
from .props import And_, Bin, Connective, Not, Or_, Var


def evaluate(f, assignment):
    """Evaluate under a dict name -> bool; unknown variables raise.

    Iterative post-order walk: normal forms can be deep enough to
    overrun the interpreter recursion limit.
    """
    todo = [(f, False)]
    values = []
    while todo:
        node, visited = todo.pop()
        if isinstance(node, Var):
            try:
                values.append(assignment[node.name])
            except KeyError:
                raise UnboundVariable(f"no value for variable '{node.name}'") from None
        elif not visited:
            todo.append((node, True))
            if isinstance(node, Not):
                todo.append((node.sub, False))
            else:
                todo.append((node.right, False))
                todo.append((node.left, False))
        elif isinstance(node, Not):
            values.append(not values.pop())
        else:
            b = values.pop()
            a = values.pop()
            c = node.conn
            if c is Connective.OR:
                values.append(a or b)
            elif c is Connective.AND:
                values.append(a and b)
            elif c is Connective.IMPLIES:
                values.append((not a) or b)
            elif c is Connective.EQUIV:
                values.append(a == b)
            elif c is Connective.XOR:
                values.append(a != b)
            else:
                values.append(not (a and b))  # Sheffer stroke
    return values[0]


@dataclass(frozen=True)
class TruthTable:
    variables: tuple
    rows: tuple  # rows[i] is the value on the i-th assignment


def assignments(variable_names):
    """All assignments in canonical order (T before F, leftmost heaviest)."""
    for combo in itertools.product((True, False), repeat=len(variable_names)):
        yield dict(zip(variable_names, combo))


def truth_table(f, variable_order=None, var_cap=None):
    """Full table of f.

    variable_order defaults to first-occurrence order; a caller may pass
    a superset or reordering that covers every variable of f.
    """
    vs = tuple(variable_order) if variable_order is not None else props.variables(f)
    cap = var_cap if var_cap is not None else DEFAULT.var_cap
    if len(vs) > cap:
        raise ResourceLimit(f"{len(vs)} variables exceeds cap {cap}")
    missing = set(props.variables(f)) - set(vs)
    if missing:
        raise UnboundVariable(f"variable order omits {sorted(missing)}")
    rows = tuple(evaluate(f, a) for a in assignments(vs))
    return TruthTable(vs, rows)


def serialize_table(t):
    """Text form: header of variable names, then 'TTF | T' rows."""
    lines = [" ".join(t.variables)]
    for combo, value in zip(itertools.product("TF", repeat=len(t.variables)), t.rows):
        lines.append("".join(combo) + " | " + ("T" if value else "F"))
    return "\n".join(lines)


def is_tautology(f, var_cap=None):
    """(True, None) or (False, first falsifying assignment)."""
    vs = props.variables(f)
    cap = var_cap if var_cap is not None else DEFAULT.var_cap
    if len(vs) > cap:
        raise ResourceLimit(f"{len(vs)} variables exceeds cap {cap}")
    for a in assignments(vs):
        if not evaluate(f, a):
            return False, a
    return True, None


# ------------------------------------------------------- table -> DNF

DnfFromTable = namedtuple("DnfFromTable", ["formula", "empty"])


def fundamental_conjunction(variable_names, polarities):
    """p1' . p2' . ... with pk' = pk or ~pk according to polarities."""
    lits = [
        Var(v) if pol else Not(Var(v))
        for v, pol in zip(variable_names, polarities)
    ]
    f = lits[0]
    for lit in lits[1:]:
        f = And_(f, lit)
    return f


def table_to_dnf(t):
    """Disjunction of the fundamental conjunctions of the true rows.

    An all-false table has no true row; the canonical contradiction
    p1 & ~p1 over the table's first variable is returned with the
    `empty` flag set.
    """
    terms = []
    for combo, value in zip(itertools.product((True, False), repeat=len(t.variables)), t.rows):
        if value:
            terms.append(fundamental_conjunction(t.variables, combo))
    if not terms:
        v = t.variables[0]
        return DnfFromTable(And_(Var(v), Not(Var(v))), True)
    f = terms[0]
    for term in terms[1:]:
        f = Or_(f, term)
    return DnfFromTable(f, False)


# ------------------------------------------------- definability closure

_BASIS_ALIASES = {
    "~": "not",
    "not": "not",
    "&": Connective.AND,
    "and": Connective.AND,
    "|": Connective.OR,
    "or": Connective.OR,
    "->": Connective.IMPLIES,
    "implies": Connective.IMPLIES,
    "<->": Connective.EQUIV,
    "equiv": Connective.EQUIV,
    "^": Connective.XOR,
    "xor": Connective.XOR,
    "/": Connective.SHEFFER,
    "sheffer": Connective.SHEFFER,
    "T": "T",
    "F": "F",
}

_BIN_OPS = {
    Connective.OR: lambda a, b: a or b,
    Connective.AND: lambda a, b: a and b,
    Connective.IMPLIES: lambda a, b: (not a) or b,
    Connective.EQUIV: lambda a, b: a == b,
    Connective.XOR: lambda a, b: a != b,
    Connective.SHEFFER: lambda a, b: not (a and b),
}


def definability_closure(basis, arity):
    """All truth functions of the given arity expressible from the basis.

    Functions are 2**arity tuples of booleans in canonical row order.
    The projections are always available as starting points; 'T' and 'F'
    in the basis contribute the constant functions.  arity must be <= 4.
    """
    if not 1 <= arity <= 4:
        raise ValueError("arity must be between 1 and 4")
    items = [_BASIS_ALIASES[b] if isinstance(b, str) else b for b in basis]
    rows = list(itertools.product((True, False), repeat=arity))
    n = len(rows)
    known = set()
    for k in range(arity):
        known.add(tuple(r[k] for r in rows))
    if "T" in items:
        known.add(tuple([True] * n))
    if "F" in items:
        known.add(tuple([False] * n))
    has_not = "not" in items
    bins = [b for b in items if isinstance(b, Connective)]
    while True:
        fresh = set()
        if has_not:
            for g in known:
                h = tuple(not x for x in g)
                if h not in known:
                    fresh.add(h)
        for conn in bins:
            op = _BIN_OPS[conn]
            for g1 in known:
                for g2 in known:
                    h = tuple(op(x, y) for x, y in zip(g1, g2))
                    if h not in known:
                        fresh.add(h)
        if not fresh:
            return frozenset(known)
        known |= fresh


def is_even_function(g):
    """True when the table has an even number of true rows."""
    return sum(1 for x in g if x) % 2 == 0


# ------------------------------------------------------- DNF and CNF

def _eliminate_defined(f):
    """Rewrite to ~, |, & only: <-> first, then ->, ^, /."""
    if isinstance(f, Var):
        return f
    if isinstance(f, Not):
        return Not(_eliminate_defined(f.sub))
    a = _eliminate_defined(f.left)
    b = _eliminate_defined(f.right)
    c = f.conn
    if c is Connective.EQUIV:
        return _eliminate_defined(And_(props.Implies_(a, b), props.Implies_(b, a)))
    if c is Connective.IMPLIES:
        return Or_(Not(a), b)
    if c is Connective.XOR:
        return And_(Or_(a, b), Not(And_(a, b)))
    if c is Connective.SHEFFER:
        return Or_(Not(a), Not(b))
    return Bin(c, a, b)


def _nnf(f, positive=True):
    if isinstance(f, Var):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return _nnf(f.sub, not positive)
    if f.conn is Connective.AND:
        conn = Connective.AND if positive else Connective.OR
    else:
        conn = Connective.OR if positive else Connective.AND
    return Bin(conn, _nnf(f.left, positive), _nnf(f.right, positive))


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, k=1):
        self.used += k
        if self.used > self.cap:
            raise ResourceLimit(f"normal form exceeds {self.cap} nodes")


def _dist_and(x, y, budget):
    """x . y distributed over disjunctions; the right factor splits first."""
    budget.spend()
    if isinstance(y, Bin) and y.conn is Connective.OR:
        return Or_(_dist_and(x, y.left, budget), _dist_and(x, y.right, budget))
    if isinstance(x, Bin) and x.conn is Connective.OR:
        return Or_(_dist_and(x.left, y, budget), _dist_and(x.right, y, budget))
    return And_(x, y)


def _dist_or(x, y, budget):
    """x V y distributed over conjunctions; the left disjunct splits first."""
    budget.spend()
    if isinstance(x, Bin) and x.conn is Connective.AND:
        return And_(_dist_or(x.left, y, budget), _dist_or(x.right, y, budget))
    if isinstance(y, Bin) and y.conn is Connective.AND:
        return And_(_dist_or(x, y.left, budget), _dist_or(x, y.right, budget))
    return Or_(x, y)


def _to_dnf_tree(f, budget):
    if isinstance(f, Bin) and f.conn is Connective.OR:
        return Or_(_to_dnf_tree(f.left, budget), _to_dnf_tree(f.right, budget))
    if isinstance(f, Bin) and f.conn is Connective.AND:
        return _dist_and(_to_dnf_tree(f.left, budget), _to_dnf_tree(f.right, budget), budget)
    return f


def _to_cnf_tree(f, budget):
    if isinstance(f, Bin) and f.conn is Connective.AND:
        return And_(_to_cnf_tree(f.left, budget), _to_cnf_tree(f.right, budget))
    if isinstance(f, Bin) and f.conn is Connective.OR:
        return _dist_or(_to_cnf_tree(f.left, budget), _to_cnf_tree(f.right, budget), budget)
    return f


def _clauses(f, conn):
    if isinstance(f, Bin) and f.conn is conn:
        return _clauses(f.left, conn) + _clauses(f.right, conn)
    return [f]


def _literal_key(lit):
    if isinstance(lit, Not):
        return (lit.sub.name, 1)
    return (lit.name, 0)


def _normalize_clause(clause, inner_conn):
    """Sort literals (name, positive first) and drop exact duplicates."""
    lits = _clauses(clause, inner_conn)
    seen = set()
    kept = []
    for lit in lits:
        key = _literal_key(lit)
        if key not in seen:
            seen.add(key)
            kept.append(lit)
    kept.sort(key=_literal_key)
    out = kept[0]
    for lit in kept[1:]:
        out = Bin(inner_conn, out, lit)
    return out


def _rebuild(clauses, outer_conn):
    out = clauses[0]
    for c in clauses[1:]:
        out = Bin(outer_conn, out, c)
    return out


def to_dnf(f, node_cap=None):
    """Disjunctive normal form over ~, &, | with normalized literals."""
    budget = _Budget(node_cap if node_cap is not None else DEFAULT.node_cap)
    tree = _to_dnf_tree(_nnf(_eliminate_defined(f)), budget)
    clauses = [_normalize_clause(c, Connective.AND) for c in _clauses(tree, Connective.OR)]
    return _rebuild(clauses, Connective.OR)


def to_cnf(f, node_cap=None):
    """Conjunctive normal form over ~, &, | with normalized literals."""
    budget = _Budget(node_cap if node_cap is not None else DEFAULT.node_cap)
    tree = _to_cnf_tree(_nnf(_eliminate_defined(f)), budget)
    clauses = [_normalize_clause(c, Connective.OR) for c in _clauses(tree, Connective.AND)]
    return _rebuild(clauses, Connective.AND)
