"""The calculus of classes and the Aristotelian moods.

Classes over a finite universe are characteristic vectors.  Class
terms combine variables, the zero and universal classes with + (sum),
* (product), binary - (difference) and prefix - (complement);
judgements about terms (equality, subclass, and the four Aristotelian
forms a, e, i, o) are the atoms of an ordinary propositional layer, so
a class formula is a truth-functional combination of judgements.

Validity is decided exactly.  Whether a judgement holds depends only
on which of the 2^k constituent regions of its k class variables are
inhabited, and a universe of 2^k elements realizes every inhabitation
pattern, so sweeping the nonempty patterns up to the requested
universe size is equivalent to sweeping every assignment of classes.
The same observation drives the decision procedure for monadic
predicate formulas: a model matters only through its inhabited cells,
of which k one-place predicates generate at most 2^k.

The four Aristotelian forms read, for subject s and predicate p:

    a(s,p)  every s is p      s * -p = 0
    e(s,p)  no s is p         s * p = 0
    i(s,p)  some s is p       s * p != 0
    o(s,p)  some s is not p   s * -p != 0
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from math import comb

from .config import DEFAULT, Config
from .errors import (
    AmbiguityError,
    FormulaSyntaxError,
    NotMonadic,
    PreconditionViolated,
    ResourceLimit,
    UnboundClassVar,
    UniverseMismatch,
)
from .models import FiniteModel, evaluate
from .preds import (
    Atom,
    Exists,
    Forall,
    PredFormula,
    free_individual_vars,
    functional_arities,
    prop_vars,
)
from .props import And_, Bin, Connective, Implies_, Not


@dataclass(frozen=True)
class FiniteClass:
    """A subset of {0, ..., size-1} as a characteristic vector."""

    size: int
    vector: tuple[bool, ...]

    def __post_init__(self):
        if len(self.vector) != self.size:
            raise UniverseMismatch(
                f"characteristic vector has length {len(self.vector)} in a universe of {self.size}"
            )

    @classmethod
    def of(cls, size, members):
        chosen = set(members)
        return cls(size, tuple(i in chosen for i in range(size)))

    @classmethod
    def empty(cls, size):
        return cls(size, (False,) * size)

    @classmethod
    def universal(cls, size):
        return cls(size, (True,) * size)

    @property
    def members(self):
        return tuple(i for i, b in enumerate(self.vector) if b)

    @property
    def is_empty(self):
        return not any(self.vector)


# ---------------------------------------------------------------------------
# Terms and judgements


class ClassConn(Enum):
    SUM = "+"
    PROD = "*"
    DIFF = "-"


@dataclass(frozen=True)
class CVar:
    name: str


@dataclass(frozen=True)
class CConst:
    full: bool


@dataclass(frozen=True)
class Comp:
    sub: "ClassTerm"


@dataclass(frozen=True)
class CBin:
    conn: ClassConn
    left: "ClassTerm"
    right: "ClassTerm"


ClassTerm = CVar | CConst | Comp | CBin

ZERO = CConst(False)
ONE = CConst(True)


@dataclass(frozen=True)
class Sub:
    left: ClassTerm
    right: ClassTerm


@dataclass(frozen=True)
class TermEq:
    left: ClassTerm
    right: ClassTerm


@dataclass(frozen=True)
class Vowel:
    kind: str
    left: ClassTerm
    right: ClassTerm

    def __post_init__(self):
        if self.kind not in "aeio":
            raise PreconditionViolated(f"judgement letter must be a, e, i or o, not {self.kind!r}")


Judgement = Sub | TermEq | Vowel


def class_vars(f):
    """Class variables in order of first occurrence."""
    seen: dict[str, None] = {}

    def walk(g):
        if isinstance(g, CVar):
            seen.setdefault(g.name)
        elif isinstance(g, Comp):
            walk(g.sub)
        elif isinstance(g, CBin):
            walk(g.left)
            walk(g.right)
        elif isinstance(g, (Sub, TermEq, Vowel)):
            walk(g.left)
            walk(g.right)
        elif isinstance(g, Not):
            walk(g.sub)
        elif isinstance(g, Bin):
            walk(g.left)
            walk(g.right)

    walk(f)
    return tuple(seen)


# ---------------------------------------------------------------------------
# Evaluation over concrete classes


def _env_size(env, size):
    sizes = {c.size for c in env.values()}
    if size is not None:
        sizes.add(size)
    if len(sizes) > 1:
        raise UniverseMismatch("classes in the environment live in different universes")
    if not sizes:
        raise PreconditionViolated("a universe size is needed when the environment is empty")
    return sizes.pop()


def eval_class_term(t, env, size=None) -> FiniteClass:
    """The class a term denotes under an environment."""
    n = _env_size(env, size)

    def walk(g):
        if isinstance(g, CVar):
            try:
                c = env[g.name]
            except KeyError:
                raise UnboundClassVar(f"no class for {g.name}") from None
            return c.vector
        if isinstance(g, CConst):
            return (g.full,) * n
        if isinstance(g, Comp):
            return tuple(not b for b in walk(g.sub))
        l, r = walk(g.left), walk(g.right)
        if g.conn is ClassConn.SUM:
            return tuple(a or b for a, b in zip(l, r))
        if g.conn is ClassConn.PROD:
            return tuple(a and b for a, b in zip(l, r))
        return tuple(a and not b for a, b in zip(l, r))

    return FiniteClass(n, walk(t))


def _judgement_value(j, env, n) -> bool:
    left = eval_class_term(j.left, env, n).vector
    right = eval_class_term(j.right, env, n).vector
    if isinstance(j, Sub):
        return all(b or not a for a, b in zip(left, right))
    if isinstance(j, TermEq):
        return left == right
    if j.kind == "a":
        return not any(a and not b for a, b in zip(left, right))
    if j.kind == "e":
        return not any(a and b for a, b in zip(left, right))
    if j.kind == "i":
        return any(a and b for a, b in zip(left, right))
    return any(a and not b for a, b in zip(left, right))


def eval_class_formula(f, env, size=None) -> bool:
    """Truth value of a judgement combination under an environment."""
    n = _env_size(env, size)

    def walk(g):
        if isinstance(g, (Sub, TermEq, Vowel)):
            return _judgement_value(g, env, n)
        if isinstance(g, Not):
            return not walk(g.sub)
        a, b = walk(g.left), walk(g.right)
        if g.conn is Connective.OR:
            return a or b
        if g.conn is Connective.AND:
            return a and b
        if g.conn is Connective.IMPLIES:
            return (not a) or b
        if g.conn is Connective.EQUIV:
            return a == b
        if g.conn is Connective.XOR:
            return a != b
        return not (a and b)

    return walk(f)


# ---------------------------------------------------------------------------
# Exact validity via region patterns


def _term_regions(t, index, k):
    full = (1 << (1 << k)) - 1
    if isinstance(t, CVar):
        try:
            i = index[t.name]
        except KeyError:
            raise UnboundClassVar(f"no class for {t.name}") from None
        return sum(1 << r for r in range(1 << k) if r >> i & 1)
    if isinstance(t, CConst):
        return full if t.full else 0
    if isinstance(t, Comp):
        return full & ~_term_regions(t.sub, index, k)
    l = _term_regions(t.left, index, k)
    r = _term_regions(t.right, index, k)
    if t.conn is ClassConn.SUM:
        return l | r
    if t.conn is ClassConn.PROD:
        return l & r
    return l & ~r


def _holds_on_pattern(f, pattern, index, k) -> bool:
    def walk(g):
        if isinstance(g, (Sub, TermEq, Vowel)):
            l = _term_regions(g.left, index, k)
            r = _term_regions(g.right, index, k)
            if isinstance(g, Sub):
                return pattern & l & ~r == 0
            if isinstance(g, TermEq):
                return pattern & (l ^ r) == 0
            if g.kind == "a":
                return pattern & l & ~r == 0
            if g.kind == "e":
                return pattern & l & r == 0
            if g.kind == "i":
                return pattern & l & r != 0
            return pattern & l & ~r != 0
        if isinstance(g, Not):
            return not walk(g.sub)
        a, b = walk(g.left), walk(g.right)
        if g.conn is Connective.OR:
            return a or b
        if g.conn is Connective.AND:
            return a and b
        if g.conn is Connective.IMPLIES:
            return (not a) or b
        if g.conn is Connective.EQUIV:
            return a == b
        if g.conn is Connective.XOR:
            return a != b
        return not (a and b)

    return walk(f)


def class_valid(f, max_universe=8, config: Config = DEFAULT):
    """Decide validity over all class assignments in universes 1..max_universe.

    A judgement sees an assignment only through its inhabited regions,
    so the sweep enumerates the nonempty region patterns realizable
    within the size limit; that is exhaustive and exact.  Returns
    (True, None) or (False, witness environment).
    """
    if max_universe < 1:
        raise PreconditionViolated("the universe needs at least one element")
    names = class_vars(f)
    k = len(names)
    cells = 1 << k
    limit = min(max_universe, cells)
    if sum(comb(cells, j) for j in range(1, limit + 1)) > config.node_cap:
        raise ResourceLimit(f"too many region patterns for {k} class variables")
    index = {v: i for i, v in enumerate(names)}
    for j in range(1, limit + 1):
        for combo in combinations(range(cells), j):
            pattern = 0
            for c in combo:
                pattern |= 1 << c
            if not _holds_on_pattern(f, pattern, index, k):
                env = {
                    v: FiniteClass(j, tuple(bool(c >> i & 1) for c in combo))
                    for v, i in index.items()
                }
                return False, env
    return True, None


# ---------------------------------------------------------------------------
# Moods

FIGURES = {
    "I": (("M", "P"), ("S", "M")),
    "II": (("P", "M"), ("S", "M")),
    "III": (("M", "P"), ("M", "S")),
    "IV": (("P", "M"), ("M", "S")),
}


@dataclass(frozen=True)
class Mood:
    """A figure and the a/e/i/o letters of major premise, minor premise
    and conclusion."""

    figure: str
    vowels: str

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise PreconditionViolated(f"figure must be I, II, III or IV, not {self.figure!r}")
        if len(self.vowels) != 3 or any(v not in "aeio" for v in self.vowels):
            raise PreconditionViolated(f"moods have three letters from a, e, i, o, not {self.vowels!r}")


def all_moods():
    return tuple(
        Mood(fig, "".join(v))
        for fig in FIGURES
        for v in product("aeio", repeat=3)
    )


def mood_judgements(m: Mood):
    (maj_s, maj_p), (min_s, min_p) = FIGURES[m.figure]
    return (
        Vowel(m.vowels[0], CVar(maj_s), CVar(maj_p)),
        Vowel(m.vowels[1], CVar(min_s), CVar(min_p)),
        Vowel(m.vowels[2], CVar("S"), CVar("P")),
    )


def mood_class_formula(m: Mood):
    major, minor, concl = mood_judgements(m)
    return Implies_(And_(major, minor), concl)


def _vowel_pred(kind, subj, pred):
    sx = Atom(subj, ("x",))
    px = Atom(pred, ("x",))
    if kind == "a":
        return Forall("x", Implies_(sx, px))
    if kind == "e":
        return Forall("x", Implies_(sx, Not(px)))
    if kind == "i":
        return Exists("x", And_(sx, px))
    return Exists("x", And_(sx, Not(px)))


def mood_pred_formula(m: Mood) -> PredFormula:
    """The mood as a formula of the predicate calculus."""
    (maj_s, maj_p), (min_s, min_p) = FIGURES[m.figure]
    major = _vowel_pred(m.vowels[0], maj_s, maj_p)
    minor = _vowel_pred(m.vowels[1], min_s, min_p)
    concl = _vowel_pred(m.vowels[2], "S", "P")
    return Implies_(And_(major, minor), concl)


@dataclass(frozen=True)
class MoodVerdict:
    kind: str  # valid, import or invalid
    imports: tuple[str, ...]
    countermodel: dict | None


def _with_import(m: Mood, term: str):
    major, minor, concl = mood_judgements(m)
    nonvacuous = Not(TermEq(CVar(term), ZERO))
    return Implies_(And_(nonvacuous, And_(major, minor)), concl)


def mood_verdict(m: Mood, config: Config = DEFAULT) -> MoodVerdict:
    """Classify one mood.

    A mood counts as valid with existential import when assuming some
    premise term (the middle or the major) nonempty makes it valid.
    Import of the conclusion's own subject is not offered: concluding
    "some S is P" from premises that tolerate an empty S plus "there
    are S" is subalternation, which the course treats as a separate
    inference, not as a mood.
    """
    ok, env = class_valid(mood_class_formula(m), max_universe=8, config=config)
    if ok:
        return MoodVerdict("valid", (), None)
    rescued = tuple(
        t for t in ("M", "P") if class_valid(_with_import(m, t), 8, config)[0]
    )
    if rescued:
        return MoodVerdict("import", rescued, None)
    return MoodVerdict("invalid", (), env)


def classify_moods(config: Config = DEFAULT) -> dict[Mood, MoodVerdict]:
    """Verdicts for all 256 moods: 15 valid, 4 needing import."""
    return {m: mood_verdict(m, config) for m in all_moods()}


MOOD_CATALOGUE = (
    ("I", "aaa", "Barbara"),
    ("I", "eae", "Celarent"),
    ("I", "aii", "Darii"),
    ("I", "eio", "Ferio"),
    ("II", "eae", "Cesare"),
    ("II", "aee", "Camestres"),
    ("II", "eio", "Festino"),
    ("II", "aoo", "Baroco"),
    ("III", "aai", "Darapti"),
    ("III", "iai", "Disamis"),
    ("III", "aii", "Datisi"),
    ("III", "eao", "Felapton"),
    ("III", "oao", "Bocardo"),
    ("III", "eio", "Feriso"),
    ("IV", "aai", "Bramantip"),
    ("IV", "aee", "Camenes"),
    ("IV", "iai", "Dimatis"),
    ("IV", "eao", "Fesapo"),
    ("IV", "eio", "Fresison"),
)

MOOD_NAMES = {(fig, vowels): name for fig, vowels, name in MOOD_CATALOGUE}


def moods_report(config: Config = DEFAULT) -> str:
    """The classical catalogue with verdicts, then the overall counts."""
    verdicts = classify_moods(config)
    lines = []
    for fig, vowels, name in MOOD_CATALOGUE:
        v = verdicts[Mood(fig, vowels)]
        tail = "valid" if v.kind == "valid" else "import " + " ".join(v.imports)
        lines.append(f"{fig} {vowels} {name} {tail}")
    counts = Counter(v.kind for v in verdicts.values())
    lines.append(f"counts {counts['valid']} {counts['import']} {counts['invalid']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# The two master formulas

MASTER_FORMULA = "~(a*b = 0 & -a*c = 0 & b*c != 0)"
SECOND_MASTER_FORMULA = "~(a != 0 & a*b = 0 & a*c = 0 & -b*-c = 0)"


def _literal_term(name, complemented):
    return Comp(CVar(name)) if complemented else CVar(name)


def _normalize_vowel(j: Vowel):
    left = (j.left, False)
    right = (j.right, j.kind in "ao")
    norm = []
    for t, flip in (left, right):
        if isinstance(t, Comp) and isinstance(t.sub, CVar):
            norm.append((t.sub.name, not flip))
        elif isinstance(t, CVar):
            norm.append((t.name, flip))
        else:
            return None
    empty = j.kind in "ae"
    return frozenset(norm), empty


def master_instance(m: Mood):
    """A substitution of signed mood terms for alpha, beta, gamma under
    which the first master formula yields the mood; None when no such
    instance exists."""
    major, minor, concl = mood_judgements(m)
    shapes = [_normalize_vowel(major), _normalize_vowel(minor)]
    negated = _normalize_vowel(concl)
    if negated is None or any(s is None for s in shapes):
        return None
    shapes.append((negated[0], not negated[1]))
    want = Counter(tuple(sorted(s[0])) + (s[1],) for s in shapes)
    for letters in product((("S", False), ("S", True), ("P", False), ("P", True),
                            ("M", False), ("M", True)), repeat=3):
        al, be, ga = letters
        neg_al = (al[0], not al[1])
        triple = [
            (frozenset((al, be)), True),
            (frozenset((neg_al, ga)), True),
            (frozenset((be, ga)), False),
        ]
        got = Counter(tuple(sorted(s[0])) + (s[1],) for s in triple)
        if got == want:
            return {
                "alpha": _literal_term(*al),
                "beta": _literal_term(*be),
                "gamma": _literal_term(*ga),
            }
    return None


# ---------------------------------------------------------------------------
# Conversions and the axiomatic basis


@dataclass(frozen=True)
class ConversionReport:
    """How the classical conversions fare once vacuous terms are admitted."""

    subalternation_witness: dict
    subalternation_with_import: bool
    contrariety_witness: dict
    contrariety_with_import: bool
    vacuous_both_true: bool


def conversion_checks(max_universe=8) -> ConversionReport:
    s, p = CVar("S"), CVar("P")
    sap = Vowel("a", s, p)
    sip = Vowel("i", s, p)
    sep = Vowel("e", s, p)
    nonvacuous = Not(TermEq(s, ZERO))
    _, w1 = class_valid(Implies_(sap, sip), max_universe)
    ok1, _ = class_valid(Implies_(And_(nonvacuous, sap), sip), max_universe)
    _, w2 = class_valid(Implies_(sap, Not(sep)), max_universe)
    ok2, _ = class_valid(Implies_(And_(nonvacuous, sap), Not(sep)), max_universe)
    vacuous = {"S": FiniteClass.empty(1), "P": FiniteClass.of(1, (0,))}
    both = eval_class_formula(And_(sap, sep), vacuous)
    return ConversionReport(w1 or {}, ok1, w2 or {}, ok2, both)


@dataclass(frozen=True)
class CheckedFact:
    name: str
    text: str
    valid: bool


def syllogistic_axiom_instances(max_universe=8) -> tuple[CheckedFact, ...]:
    """The two-mood basis and the definitional dualities, each decided."""
    facts = (
        ("identity", "a(x, x)"),
        ("Barbara", "a(x, y) & a(y, z) -> a(x, z)"),
        ("Dimatis", "i(x, y) & a(y, z) -> i(z, x)"),
        ("e-duality", "e(x, y) <-> ~i(x, y)"),
        ("o-duality", "o(x, y) <-> ~a(x, y)"),
    )
    return tuple(
        CheckedFact(name, text, class_valid(parse_class(text), max_universe)[0])
        for name, text in facts
    )


# ---------------------------------------------------------------------------
# The monadic decider


@dataclass(frozen=True)
class MonadicReport:
    """Per-size validity of a monadic formula up to the small-model bound."""

    formula: PredFormula
    bound: int
    per_size: tuple[tuple[int, bool], ...]
    witness: tuple | None

    @property
    def valid(self) -> bool:
        return all(ok for _, ok in self.per_size)

    @property
    def first_failure(self):
        for size, ok in self.per_size:
            if not ok:
                return size
        return None


def decide_monadic(f: PredFormula, max_size=None, config: Config = DEFAULT) -> MonadicReport:
    """Decide validity of a formula whose functional variables are all
    one-place.

    k predicates cut a universe into at most 2^k cells, and a monadic
    formula cannot tell two models with the same inhabited cells apart,
    so checking every cell pattern through size 2^k settles validity in
    all finite universes.  The report carries a per-size table and, for
    an invalid formula, a falsifying model of the first failing size.
    """
    arities = functional_arities(f)
    wide = sorted(name for name, k in arities.items() if k != 1)
    if wide:
        raise NotMonadic(f"not monadic: {', '.join(wide)} is not one-place")
    preds = sorted(arities)
    k = len(preds)
    bound = 1 << k
    top = max(bound, max_size or 0)
    if top > config.universe_cap:
        raise ResourceLimit(f"universe sweep to {top} exceeds the cap {config.universe_cap}")
    props = sorted(prop_vars(f))
    free = sorted(free_individual_vars(f))
    per_size = []
    witness = None
    ok = True
    for n in range(1, top + 1):
        if ok and n <= bound:
            for combo in combinations(range(bound), n):
                relations = tuple(
                    (p, frozenset((e,) for e, cell in enumerate(combo) if cell >> i & 1))
                    for i, p in enumerate(preds)
                )
                for values in product((False, True), repeat=len(props)):
                    model = FiniteModel(n, relations, tuple(zip(props, values)))
                    for point in product(range(n), repeat=len(free)):
                        env = dict(zip(free, point))
                        if not evaluate(f, model, env):
                            ok = False
                            witness = (model, env)
                            break
                    if not ok:
                        break
                if not ok:
                    break
        per_size.append((n, ok))
    return MonadicReport(f, bound, tuple(per_size), witness)


# ---------------------------------------------------------------------------
# Reading and writing class formulas

_CLASS_SYMBOLS = ("<->", "->", "!=", "<=", "~", "&", "|", "+", "*", "-", "=", "(", ")", ",")


def _tokenize_class(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for sym in _CLASS_SYMBOLS:
            if text.startswith(sym, i):
                tokens.append((sym, i))
                i += len(sym)
                break
        else:
            if c in "01":
                tokens.append(("const:" + c, i))
                i += 1
            elif c.isalpha():
                j = i + 1
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("ident:" + text[i:j], i))
                i = j
            else:
                raise FormulaSyntaxError(f"unexpected character {c!r}", i)
    return tokens


class _ClassParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize_class(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        if self.pos >= len(self.tokens):
            raise FormulaSyntaxError("unexpected end of input", len(self.text))
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, sym):
        tok, at = self.next()
        if tok != sym:
            raise FormulaSyntaxError(f"expected {sym!r}", at)

    def formula(self):
        left = self.disj()
        if self.peek() in ("->", "<->"):
            op, at = self.next()
            right = self.disj()
            if self.peek() in ("->", "<->"):
                raise AmbiguityError(
                    "chains of -> and <-> need brackets", self.tokens[self.pos][1]
                )
            conn = Connective.IMPLIES if op == "->" else Connective.EQUIV
            left = Bin(conn, left, right)
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.next()
            f = Bin(Connective.OR, f, self.conj())
        return f

    def conj(self):
        f = self.neg()
        while self.peek() == "&":
            self.next()
            f = Bin(Connective.AND, f, self.neg())
        return f

    def neg(self):
        if self.peek() == "~":
            self.next()
            return Not(self.neg())
        return self.atom()

    def atom(self):
        mark = self.pos
        try:
            return self.judgement()
        except FormulaSyntaxError:
            self.pos = mark
        self.expect("(")
        f = self.formula()
        self.expect(")")
        return f

    def judgement(self):
        tok = self.peek()
        if (
            tok in ("ident:a", "ident:e", "ident:i", "ident:o")
            and self.pos + 1 < len(self.tokens)
            and self.tokens[self.pos + 1][0] == "("
        ):
            kind = self.next()[0][6:]
            self.expect("(")
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(")")
            return Vowel(kind, left, right)
        left = self.term()
        tok, at = self.next()
        if tok == "=":
            return TermEq(left, self.term())
        if tok == "!=":
            return Not(TermEq(left, self.term()))
        if tok == "<=":
            return Sub(left, self.term())
        raise FormulaSyntaxError("expected a judgement", at)

    def term(self):
        f = self.addend()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            conn = ClassConn.SUM if op == "+" else ClassConn.DIFF
            f = CBin(conn, f, self.addend())
        return f

    def addend(self):
        f = self.factor()
        while self.peek() == "*":
            self.next()
            f = CBin(ClassConn.PROD, f, self.factor())
        return f

    def factor(self):
        tok, at = self.next()
        if tok == "-":
            return Comp(self.factor())
        if tok == "(":
            t = self.term()
            self.expect(")")
            return t
        if tok.startswith("const:"):
            return ONE if tok[6:] == "1" else ZERO
        if tok.startswith("ident:"):
            return CVar(tok[6:])
        raise FormulaSyntaxError("expected a class term", at)


def parse_class(text: str):
    """Parse a class formula (judgements under ~ & | -> <->)."""
    parser = _ClassParser(text)
    f = parser.formula()
    if parser.pos != len(parser.tokens):
        raise FormulaSyntaxError("trailing input", parser.tokens[parser.pos][1])
    return f


def parse_class_term(text: str) -> ClassTerm:
    """Parse a bare class term."""
    parser = _ClassParser(text)
    t = parser.term()
    if parser.pos != len(parser.tokens):
        raise FormulaSyntaxError("trailing input", parser.tokens[parser.pos][1])
    return t


def _print_term(t, need=0):
    if isinstance(t, CVar):
        return t.name
    if isinstance(t, CConst):
        return "1" if t.full else "0"
    if isinstance(t, Comp):
        return "-" + _print_term(t.sub, 3)
    level = 2 if t.conn is ClassConn.PROD else 1
    sep = "*" if t.conn is ClassConn.PROD else f" {t.conn.value} "
    out = _print_term(t.left, level) + sep + _print_term(t.right, level + 1)
    return "(" + out + ")" if level < need else out


def print_class_term(t: ClassTerm) -> str:
    return _print_term(t)


def _print_class(f, need):
    if isinstance(f, Vowel):
        return f"{f.kind}({_print_term(f.left)}, {_print_term(f.right)})"
    if isinstance(f, Sub):
        return f"{_print_term(f.left)} <= {_print_term(f.right)}"
    if isinstance(f, TermEq):
        return f"{_print_term(f.left)} = {_print_term(f.right)}"
    if isinstance(f, Not):
        if isinstance(f.sub, TermEq):
            return f"{_print_term(f.sub.left)} != {_print_term(f.sub.right)}"
        return "~" + _print_class(f.sub, 4)
    level = {Connective.AND: 3, Connective.OR: 2}.get(f.conn, 1)
    left_need = level + 1 if level == 1 else level
    out = _print_class(f.left, left_need) + f" {f.conn.value} " + _print_class(f.right, level + 1)
    return "(" + out + ")" if level < need else out


def print_class(f) -> str:
    """Render a class formula in the syntax parse_class accepts."""
    return _print_class(f, 0)
