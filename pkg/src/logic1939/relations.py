"""Binary relations in extension over a finite universe.

A relation on n elements is an n by n incidence matrix.  The class
operations (sum, product, complement, difference) act entrywise; on
top of those come the converse, the relative product R|S (a boolean
matrix product), its powers, the identity relation, and the vacuous
and universal relations.  classify tests the structural properties
straight from their definitions, so the algebraic characterizations
(transitive iff R|R a subrelation of R, and so on) stay available as
independent checks.
"""

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionViolated, ScriptError, UniverseMismatch, ZeroPower


@dataclass(frozen=True)
class FiniteRelation:
    """A binary relation as an incidence matrix: matrix[x][y] iff x R y."""

    size: int
    matrix: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.size or any(len(row) != self.size for row in self.matrix):
            raise UniverseMismatch(f"incidence matrix is not {self.size} by {self.size}")

    @classmethod
    def of(cls, size, pairs):
        chosen = set(pairs)
        for x, y in chosen:
            if not (0 <= x < size and 0 <= y < size):
                raise UniverseMismatch(f"pair ({x}, {y}) is outside a universe of {size}")
        return cls(size, tuple(tuple((x, y) in chosen for y in range(size)) for x in range(size)))

    @classmethod
    def vacuous(cls, size):
        return cls.of(size, ())

    @classmethod
    def universal(cls, size):
        return cls(size, ((True,) * size,) * size)

    @property
    def pairs(self):
        return tuple(
            (x, y) for x in range(self.size) for y in range(self.size) if self.matrix[x][y]
        )

    def holds(self, x, y) -> bool:
        return self.matrix[x][y]


def _same_universe(*rels):
    sizes = {r.size for r in rels}
    if len(sizes) != 1:
        raise UniverseMismatch("relations live over different universes")
    return sizes.pop()


def _zip_entries(op, r, s):
    n = _same_universe(r, s)
    return FiniteRelation(
        n, tuple(tuple(op(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(r.matrix, s.matrix))
    )


def rel_sum(r, s):
    return _zip_entries(lambda a, b: a or b, r, s)


def rel_product(r, s):
    return _zip_entries(lambda a, b: a and b, r, s)


def rel_difference(r, s):
    return _zip_entries(lambda a, b: a and not b, r, s)


def rel_complement(r):
    return FiniteRelation(r.size, tuple(tuple(not a for a in row) for row in r.matrix))


def converse(r):
    """x R-converse y iff y R x."""
    n = r.size
    return FiniteRelation(n, tuple(tuple(r.matrix[y][x] for y in range(n)) for x in range(n)))


def relative_product(r, s):
    """x (R|S) y iff some z has x R z and z S y: the boolean matrix product."""
    n = _same_universe(r, s)
    return FiniteRelation(
        n,
        tuple(
            tuple(any(r.matrix[x][z] and s.matrix[z][y] for z in range(n)) for y in range(n))
            for x in range(n)
        ),
    )


def identity(size) -> FiniteRelation:
    return FiniteRelation(size, tuple(tuple(x == y for y in range(size)) for x in range(size)))


def rel_power(r, k) -> FiniteRelation:
    """R^k = R|...|R with k factors; defined for k >= 1."""
    if k < 1:
        raise ZeroPower(f"relative powers start at 1, not {k}")
    out = r
    for _ in range(k - 1):
        out = relative_product(out, r)
    return out


def subrelation(r, s) -> bool:
    _same_universe(r, s)
    return all(b or not a for ra, rb in zip(r.matrix, s.matrix) for a, b in zip(ra, rb))


REL_OPS = {
    "plus": (2, rel_sum),
    "times": (2, rel_product),
    "minus": (1, rel_complement),
    "diff": (2, rel_difference),
    "inverse": (1, converse),
    "relprod": (2, relative_product),
    "subrel": (2, subrelation),
}


def rel_op(op, *args):
    """Apply a named operation; power and identity take an integer."""
    if op == "power":
        return rel_power(*args)
    if op == "identity":
        return identity(*args)
    try:
        arity, fn = REL_OPS[op]
    except KeyError:
        raise PreconditionViolated(f"unknown relation operation {op!r}") from None
    if len(args) != arity:
        raise PreconditionViolated(f"{op} takes {arity} relation(s), got {len(args)}")
    return fn(*args)


# ---------------------------------------------------------------------------
# Structural properties


@dataclass(frozen=True)
class RelationProfile:
    symmetric: bool
    transitive: bool
    intransitive: bool
    one_many: bool
    many_one: bool
    one_one: bool


def classify(r: FiniteRelation) -> RelationProfile:
    """Test each property by its defining condition.

    One-many means the first term is determined: x R y and z R y force
    x = z.  Many-one is the mirror image, one-one is both at once, and
    intransitive denies every transitive step.
    """
    n = r.size
    m = r.matrix
    symmetric = all(m[x][y] == m[y][x] for x in range(n) for y in range(n))
    transitive = True
    intransitive = True
    for x, y, z in product(range(n), repeat=3):
        if m[x][y] and m[y][z]:
            if m[x][z]:
                intransitive = False
            else:
                transitive = False
    one_many = all(
        x == z
        for x, y, z in product(range(n), repeat=3)
        if m[x][y] and m[z][y]
    )
    many_one = all(
        y == z
        for x, y, z in product(range(n), repeat=3)
        if m[x][y] and m[x][z]
    )
    return RelationProfile(symmetric, transitive, intransitive, one_many, many_one, one_many and many_one)


@dataclass(frozen=True)
class MonotonicityCheck:
    """Premises R in S and P in Q; conclusion R|P in S|Q."""

    premises_hold: bool
    conclusion_holds: bool

    @property
    def satisfied(self) -> bool:
        return not self.premises_hold or self.conclusion_holds


def monotonicity(r, s, p, q) -> MonotonicityCheck:
    """Check the monotonicity of the relative product in both factors."""
    premises = subrelation(r, s) and subrelation(p, q)
    conclusion = subrelation(relative_product(r, p), relative_product(s, q))
    return MonotonicityCheck(premises, conclusion)


# ---------------------------------------------------------------------------
# Ternary relations


@dataclass(frozen=True)
class TernaryRelation:
    """A set of triples (x, z, u), read as x M (z, u)."""

    size: int
    triples: frozenset

    def __post_init__(self):
        for t in self.triples:
            if len(t) != 3 or any(not 0 <= e < self.size for e in t):
                raise UniverseMismatch(f"triple {t} is outside a universe of {self.size}")

    @classmethod
    def of(cls, size, triples):
        return cls(size, frozenset(tuple(t) for t in triples))


def triadic_one_many(m: TernaryRelation) -> bool:
    """Whether x M (z, u) and y M (z, u) force x = y."""
    seen = {}
    for x, z, u in m.triples:
        if seen.setdefault((z, u), x) != x:
            return False
    return True


# ---------------------------------------------------------------------------
# Relation files


def parse_relation(text: str) -> FiniteRelation:
    """Read a relation file: `universe n`, then one `a b` pair per line.

    Elements are indices when every token in the file is a number, and
    names mapped to indices in order of first appearance otherwise.
    Blank lines and lines starting with # are skipped.
    """
    rows = []
    size = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if size is None:
            if len(fields) != 2 or fields[0] != "universe" or not fields[1].isdigit():
                raise ScriptError(lineno, "expected `universe n`")
            size = int(fields[1])
            continue
        if len(fields) != 2:
            raise ScriptError(lineno, "expected a pair `a b`")
        rows.append((lineno, fields))
    if size is None:
        raise ScriptError(1, "expected `universe n`")
    pairs = []
    if all(tok.isdigit() for _, fields in rows for tok in fields):
        for lineno, fields in rows:
            x, y = int(fields[0]), int(fields[1])
            if x >= size or y >= size:
                raise ScriptError(lineno, f"element out of range for universe {size}")
            pairs.append((x, y))
    else:
        names: dict[str, int] = {}
        for lineno, fields in rows:
            pair = []
            for tok in fields:
                if tok not in names:
                    if len(names) >= size:
                        raise ScriptError(lineno, f"more than {size} distinct names")
                    names[tok] = len(names)
                pair.append(names[tok])
            pairs.append(tuple(pair))
    return FiniteRelation.of(size, pairs)


def serialize_relation(r: FiniteRelation) -> str:
    lines = [f"universe {r.size}"]
    lines.extend(f"{x} {y}" for x, y in r.pairs)
    return "\n".join(lines) + "\n"


def all_relations(size):
    """Every relation over the universe, 2^(size*size) of them."""
    cells = [(x, y) for x in range(size) for y in range(size)]
    for bits in range(1 << len(cells)):
        yield FiniteRelation.of(size, (cells[i] for i in range(len(cells)) if bits >> i & 1))
