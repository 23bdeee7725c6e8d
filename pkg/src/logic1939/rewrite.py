"""Positional rewriting of subformulas.

A path addresses one subformula occurrence as a tuple of moves from the
root: "l" and "r" descend into a binary connective, "s" descends under a
negation, "b" descends into a quantifier body.  The empty tuple is the
root itself.  Definitional rewrite rules replace exactly the addressed
occurrence, leaving the rest of the formula untouched.
"""

from __future__ import annotations

from .errors import ProofError, UndefinedConnective
from .props import Bin, Connective, Implies_, Not, PropFormula, Var

Path = tuple[str, ...]


def parse_path(text: str) -> Path:
    """Parse a path written as dotted moves, with "-" for the root."""
    text = text.strip()
    if text == "-":
        return ()
    moves = tuple(text.split("."))
    for m in moves:
        if m not in ("l", "r", "s", "b"):
            raise ValueError(f"bad path move {m!r}")
    return moves


def format_path(path: Path) -> str:
    return ".".join(path) if path else "-"


def subterm_at(f, path: Path):
    """Return the subformula at path, or None if the path goes nowhere."""
    for move in path:
        if move == "s" and isinstance(f, Not):
            f = f.sub
        elif move == "l" and isinstance(f, Bin):
            f = f.left
        elif move == "r" and isinstance(f, Bin):
            f = f.right
        elif move == "b" and hasattr(f, "body"):
            f = f.body
        else:
            return None
    return f


def replace_at(f, path: Path, new):
    """Rebuild f with the subformula at path replaced by new."""
    if not path:
        return new
    move, rest = path[0], path[1:]
    if move == "s" and isinstance(f, Not):
        return Not(replace_at(f.sub, rest, new))
    if move == "l" and isinstance(f, Bin):
        return Bin(f.conn, replace_at(f.left, rest, new), f.right)
    if move == "r" and isinstance(f, Bin):
        return Bin(f.conn, f.left, replace_at(f.right, rest, new))
    if move == "b" and hasattr(f, "body"):
        return type(f)(f.var, replace_at(f.body, rest, new))
    raise ValueError("path does not address a subformula")


DEF_RULES = ("imp", "and", "equiv")


def expand_definition(f, rule: str):
    """Rewrite one defined connective into primitives, or None if f
    does not match the rule's left-hand side."""
    if rule == "imp":
        if isinstance(f, Bin) and f.conn is Connective.IMPLIES:
            return Bin(Connective.OR, Not(f.left), f.right)
    elif rule == "and":
        if isinstance(f, Bin) and f.conn is Connective.AND:
            return Not(Bin(Connective.OR, Not(f.left), Not(f.right)))
    elif rule == "equiv":
        if isinstance(f, Bin) and f.conn is Connective.EQUIV:
            return Bin(
                Connective.AND,
                Implies_(f.left, f.right),
                Implies_(f.right, f.left),
            )
    else:
        raise UndefinedConnective(f"no definitional rule named {rule!r}")
    return None


def fold_definition(f, rule: str):
    """Inverse of expand_definition: recognise the primitive pattern and
    reintroduce the defined connective.  Returns None on mismatch."""
    if rule == "imp":
        if isinstance(f, Bin) and f.conn is Connective.OR and isinstance(f.left, Not):
            return Implies_(f.left.sub, f.right)
    elif rule == "and":
        if (
            isinstance(f, Not)
            and isinstance(f.sub, Bin)
            and f.sub.conn is Connective.OR
            and isinstance(f.sub.left, Not)
            and isinstance(f.sub.right, Not)
        ):
            return Bin(Connective.AND, f.sub.left.sub, f.sub.right.sub)
    elif rule == "equiv":
        if (
            isinstance(f, Bin)
            and f.conn is Connective.AND
            and isinstance(f.left, Bin)
            and f.left.conn is Connective.IMPLIES
            and isinstance(f.right, Bin)
            and f.right.conn is Connective.IMPLIES
            and f.left.left == f.right.right
            and f.left.right == f.right.left
        ):
            return Bin(Connective.EQUIV, f.left.left, f.left.right)
    else:
        raise UndefinedConnective(f"no definitional rule named {rule!r}")
    return None


def apply_definition(f, path: Path, rule: str, direction: str):
    """Apply one definitional rewrite at the addressed occurrence.

    Raises ValueError when the path or the pattern does not match; the
    proof checker wraps that into a ProofError.
    """
    target = subterm_at(f, path)
    if target is None:
        raise ValueError("path does not address a subformula")
    if direction == "expand":
        new = expand_definition(target, rule)
    elif direction == "fold":
        new = fold_definition(target, rule)
    else:
        raise ValueError(f"direction must be expand or fold, not {direction!r}")
    if new is None:
        raise ValueError(
            f"subformula at {format_path(path)} does not match rule {rule} ({direction})"
        )
    return replace_at(f, path, new)
