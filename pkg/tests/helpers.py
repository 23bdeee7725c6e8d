"""Shared random generators and table oracles for the test suite."""

from logic1939 import semantics
from logic1939.props import (
    And_,
    Equiv_,
    Implies_,
    Not,
    Or_,
    Sheffer_,
    Var,
    Xor_,
    variables,
)

ALL_BINARY = (And_, Or_, Implies_, Equiv_, Xor_, Sheffer_)
PROOF_BINARY = (And_, Or_, Implies_, Equiv_)


def random_formula(rng, names=("p", "q", "r"), leaves=4, binary=ALL_BINARY):
    """A random formula with exactly the given number of variable leaves."""
    if leaves <= 1:
        f = Var(rng.choice(names))
    else:
        k = rng.randint(1, leaves - 1)
        f = rng.choice(binary)(
            random_formula(rng, names, k, binary),
            random_formula(rng, names, leaves - k, binary),
        )
    while rng.random() < 0.25:
        f = Not(f)
    return f


def tables_agree(f, g):
    """True when f and g evaluate alike on every assignment to their variables."""
    names = tuple(dict.fromkeys(variables(f) + variables(g))) or ("p",)
    return all(
        semantics.evaluate(f, a) == semantics.evaluate(g, a)
        for a in semantics.assignments(names)
    )


def enumerate_formulas(names, max_size, binary=PROOF_BINARY):
    """Every formula over the given variables with size(f) <= max_size."""
    by_size = {1: [Var(v) for v in names]}
    for n in range(2, max_size + 1):
        layer = [Not(f) for f in by_size[n - 1]]
        for i in range(1, n - 1):
            for conn in binary:
                layer.extend(
                    conn(a, b) for a in by_size[i] for b in by_size[n - 1 - i]
                )
        by_size[n] = layer
    return [f for n in sorted(by_size) for f in by_size[n]]
