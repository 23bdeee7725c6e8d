"""Propositional formulas: trees, two parsers, two printers, substitution.

The ASCII surface syntax uses ~ & | -> <-> ^ / with precedence
~ > & > | > {->, <->, ^, /}.  The four weakest connectives have equal
force and do not associate: "p -> q -> r" is rejected as ambiguous.
& and | associate to the left.

The Polish (prefix) syntax uses the letters N K A C E X D for not, and,
or, if-then, iff, xor and the stroke.  A single lowercase letter is a
variable; longer names are written in brackets, e.g. [p1].
"""

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import AmbiguityError, FormulaSyntaxError


class Connective(Enum):
    OR = "|"
    AND = "&"
    IMPLIES = "->"
    EQUIV = "<->"
    XOR = "^"
    SHEFFER = "/"


@dataclass(eq=True, frozen=True)
class Var:
    name: str


@dataclass(eq=True, frozen=True)
class Not:
    sub: "PropFormula"


@dataclass(eq=True, frozen=True)
class Bin:
    conn: Connective
    left: "PropFormula"
    right: "PropFormula"


PropFormula = Union[Var, Not, Bin]


def Or_(a, b):
    return Bin(Connective.OR, a, b)


def And_(a, b):
    return Bin(Connective.AND, a, b)


def Implies_(a, b):
    return Bin(Connective.IMPLIES, a, b)


def Equiv_(a, b):
    return Bin(Connective.EQUIV, a, b)


def Xor_(a, b):
    return Bin(Connective.XOR, a, b)


def Sheffer_(a, b):
    return Bin(Connective.SHEFFER, a, b)


def _walk(f):
    """Preorder iteration; explicit stack so deep spines cannot overflow."""
    todo = [f]
    while todo:
        g = todo.pop()
        yield g
        if isinstance(g, Not):
            todo.append(g.sub)
        elif isinstance(g, Bin):
            todo.append(g.right)
            todo.append(g.left)


def variables(f):
    """Variables of f, ordered by first occurrence, left to right."""
    seen = []
    found = set()
    for g in _walk(f):
        if isinstance(g, Var) and g.name not in found:
            found.add(g.name)
            seen.append(g.name)
    return tuple(seen)


def size(f):
    """Node count of the tree (variables included)."""
    return sum(1 for _ in _walk(f))


def connectives(f):
    """Set of connectives occurring in f ('~' stands for negation)."""
    out = set()
    for g in _walk(f):
        if isinstance(g, Not):
            out.add("~")
        elif isinstance(g, Bin):
            out.add(g.conn)
    return out


def substitute(f, mapping):
    """Simultaneous substitution of formulas for variables.

    mapping: dict name -> PropFormula.  Variables outside the mapping
    are left alone.
    """
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if isinstance(f, Not):
        return Not(substitute(f.sub, mapping))
    return Bin(f.conn, substitute(f.left, mapping), substitute(f.right, mapping))


# ---------------------------------------------------------------- infix

_WEAK = (Connective.IMPLIES, Connective.EQUIV, Connective.XOR, Connective.SHEFFER)

_TOKEN_CHARS = {"(": "(", ")": ")", "~": "~", "&": "&", "|": "|", "^": "^", "/": "/"}


def _tokenize_infix(text):
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
        if c in _TOKEN_CHARS:
            tokens.append((c, i))
            i += 1
            continue
        if c.islower():
            j = i + 1
            while j < n and (text[j].islower() or text[j].isdigit() or text[j] == "_"):
                j += 1
            tokens.append(("ident:" + text[i:j], i))
            i = j
            continue
        raise FormulaSyntaxError(f"unexpected character {c!r}", i)
    return tokens


class _InfixParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize_infix(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def here(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        f = self.formula()
        if self.pos != len(self.tokens):
            raise FormulaSyntaxError("trailing input", self.here())
        return f

    def formula(self):
        left = self.disj()
        tok = self.peek()
        if tok in ("->", "<->", "^", "/"):
            oppos = self.here()
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
            del oppos
            return Bin(conn, left, right)
        return left

    def disj(self):
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or_(f, self.conj())
        return f

    def conj(self):
        f = self.neg()
        while self.peek() == "&":
            self.take()
            f = And_(f, self.neg())
        return f

    def neg(self):
        if self.peek() == "~":
            self.take()
            return Not(self.neg())
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", self.here())
        if tok.startswith("ident:"):
            self.take()
            return Var(tok[len("ident:"):])
        if tok == "(":
            self.take()
            f = self.formula()
            if self.peek() != ")":
                raise FormulaSyntaxError("expected ')'", self.here())
            self.take()
            return f
        raise FormulaSyntaxError(f"unexpected token {tok!r}", self.here())


def parse_infix(text):
    """Parse the ASCII infix syntax into a PropFormula."""
    return _InfixParser(text).parse()


def _level(f):
    if isinstance(f, Var):
        return 5
    if isinstance(f, Not):
        return 4
    if f.conn is Connective.AND:
        return 3
    if f.conn is Connective.OR:
        return 2
    return 1


def print_infix(f, mode="minimal"):
    """Render a formula; mode is 'minimal' or 'full' parenthesization."""
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
    if isinstance(f, Not):
        sub = _print_full(f.sub)
        return "~" + sub
    return f"({_print_full(f.left)} {f.conn.value} {_print_full(f.right)})"


# ---------------------------------------------------------------- polish

_POLISH_OF_CONN = {
    Connective.AND: "K",
    Connective.OR: "A",
    Connective.IMPLIES: "C",
    Connective.EQUIV: "E",
    Connective.XOR: "X",
    Connective.SHEFFER: "D",
}
_CONN_OF_POLISH = {v: k for k, v in _POLISH_OF_CONN.items()}


def print_polish(f):
    """Render in parenthesis-free prefix notation."""
    if isinstance(f, Var):
        if len(f.name) == 1:
            return f.name
        return f"[{f.name}]"
    if isinstance(f, Not):
        return "N" + print_polish(f.sub)
    return _POLISH_OF_CONN[f.conn] + print_polish(f.left) + print_polish(f.right)


def parse_polish(text):
    """Parse prefix notation; inverse of print_polish."""
    pos = 0
    n = len(text)

    def node():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            raise FormulaSyntaxError("unexpected end of input", pos)
        c = text[pos]
        if c == "N":
            pos += 1
            return Not(node())
        if c in _CONN_OF_POLISH:
            pos += 1
            conn = _CONN_OF_POLISH[c]
            left = node()
            right = node()
            return Bin(conn, left, right)
        if c == "[":
            end = text.find("]", pos)
            if end < 0:
                raise FormulaSyntaxError("unterminated '['", pos)
            name = text[pos + 1 : end]
            if not name or not name[0].islower() or not all(
                ch.islower() or ch.isdigit() or ch == "_" for ch in name
            ):
                raise FormulaSyntaxError(f"bad bracketed name {name!r}", pos)
            pos = end + 1
            return Var(name)
        if c.islower():
            pos += 1
            return Var(c)
        raise FormulaSyntaxError(f"unexpected character {c!r}", pos)

    f = node()
    while pos < n and text[pos].isspace():
        pos += 1
    if pos != n:
        raise FormulaSyntaxError("trailing input", pos)
    return f
