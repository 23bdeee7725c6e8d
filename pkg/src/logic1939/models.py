"""Finite models for predicate formulas.

A model fixes a universe {0, ..., size-1}, a relation for every
functional variable and a truth value for every propositional variable;
free individual variables are supplied by an environment.  The sweep
helpers enumerate all interpretations at a given size, so validity
checks at small sizes are exhaustive.
"""

from dataclasses import dataclass
from itertools import product

from .errors import UnboundVariable
from .preds import (
    Atom,
    Exists,
    Forall,
    free_individual_vars,
    functional_arities,
    prop_vars,
)
from .props import Bin, Connective, Not, Var


@dataclass(eq=True, frozen=True)
class FiniteModel:
    size: int
    relations: tuple
    props: tuple

    def __post_init__(self):
        object.__setattr__(self, "_rels", dict(self.relations))
        object.__setattr__(self, "_props", dict(self.props))

    def relation(self, name):
        try:
            return self._rels[name]
        except KeyError:
            raise UnboundVariable(f"no relation for {name}") from None

    def prop(self, name):
        try:
            return self._props[name]
        except KeyError:
            raise UnboundVariable(f"no value for {name}") from None


def evaluate(f, model, env=None):
    """Truth value of f in the model under the environment."""
    env = dict(env or {})

    def walk(g, env):
        if isinstance(g, Var):
            return model.prop(g.name)
        if isinstance(g, Atom):
            try:
                point = tuple(env[a] for a in g.args)
            except KeyError as exc:
                raise UnboundVariable(f"no element for {exc.args[0]}") from None
            return point in model.relation(g.pred)
        if isinstance(g, Not):
            return not walk(g.sub, env)
        if isinstance(g, Bin):
            a = walk(g.left, env)
            b = walk(g.right, env)
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
        domain = range(model.size)
        if isinstance(g, Forall):
            return all(walk(g.body, {**env, g.var: d}) for d in domain)
        return any(walk(g.body, {**env, g.var: d}) for d in domain)

    return walk(f, env)


def _relation_tables(size, arity):
    cells = list(product(range(size), repeat=arity))
    for bits in range(1 << len(cells)):
        yield frozenset(c for i, c in enumerate(cells) if bits >> i & 1)


def interpretations(f, size):
    """Yield (model, env) over every interpretation of f at this size."""
    props = sorted(prop_vars(f))
    funcs = sorted(functional_arities(f).items())
    free = sorted(free_individual_vars(f))
    for values in product((False, True), repeat=len(props)):
        prop_part = tuple(zip(props, values))
        for tables in product(*(_relation_tables(size, k) for _, k in funcs)):
            model = FiniteModel(
                size, tuple((name, t) for (name, _), t in zip(funcs, tables)), prop_part
            )
            for point in product(range(size), repeat=len(free)):
                yield model, dict(zip(free, point))


def find_countermodel(f, max_size=4):
    """Search sizes 1..max_size exhaustively; return a falsifying
    (model, env) or None."""
    for size in range(1, max_size + 1):
        for model, env in interpretations(f, size):
            if not evaluate(f, model, env):
                return model, env
    return None


def valid_in_all(f, max_size=4):
    """True when f holds in every interpretation up to max_size."""
    return find_countermodel(f, max_size) is None
