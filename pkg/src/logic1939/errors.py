"""Shared exception types.

Every error the library raises deliberately derives from LogicError, so
callers (in particular the CLI) can tell domain failures apart from bugs.
"""


class LogicError(Exception):
    """Base class for all deliberate failures."""


class FormulaSyntaxError(LogicError):
    """Unparseable input; carries the offending position when known."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class AmbiguityError(FormulaSyntaxError):
    """Chained connectives of equal force with no parentheses."""


class UnboundVariable(LogicError):
    """An assignment is missing a variable the formula uses."""


class ResourceLimit(LogicError):
    """A configured cap (variables, nodes, universe size) was exceeded."""


class EmptyDisjunction(LogicError):
    """An all-false truth table has no disjunctive normal form proper."""


class ProofError(LogicError):
    """A proof step failed to check.

    step is the 1-based index of the offending step, code a short
    machine-readable reason (BadAxiom, BadSubstitution, BadMP, BadPath,
    BadRewrite, ...).
    """

    def __init__(self, step, code, message):
        self.step = step
        self.code = code
        super().__init__(f"step {step}: {code}: {message}")


class ScriptError(LogicError):
    """A line of a proof script or data file could not be parsed."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class NotATautology(LogicError):
    """Synthesis was asked to prove a refutable formula."""

    def __init__(self, counterexample):
        self.counterexample = counterexample
        pretty = ", ".join(f"{v}={'T' if b else 'F'}" for v, b in counterexample.items())
        super().__init__(f"not a tautology; falsified by {pretty}")


class PreconditionViolated(LogicError):
    """An operation's stated precondition does not hold."""


class UnsupportedConnective(LogicError):
    """The proof kernel has no definition rule for this connective."""


class UndefinedConnective(LogicError):
    """The matrix has no table for this connective."""


class WellFormednessError(LogicError):
    """Violation of the free/bound variable discipline."""


class CaptureError(LogicError):
    """A renaming would capture or collide with existing variables."""


class NotFree(LogicError):
    """Asked to substitute for a variable that has no free occurrence."""


class BoundClash(LogicError):
    """A substituted variable already occurs bound."""


class VariableOverlap(LogicError):
    """Rule 2 restriction: replacement shares a variable with the target."""

    def __init__(self, name, message=None):
        self.name = name
        super().__init__(message or f"replacement shares variable '{name}' with the target formula")


class ArityMismatch(LogicError):
    """A functional variable was used with inconsistent argument counts."""


class SideConditionViolated(LogicError):
    """A quantifier rule's side condition fails."""


class NotMonadic(LogicError):
    """The monadic decider received a formula with a polyadic predicate."""


class UniverseMismatch(LogicError):
    """Operands live over different universes."""


class UnboundClassVar(LogicError):
    """A class-term environment is missing a class variable."""


class ZeroPower(LogicError):
    """Relative powers are defined for exponents >= 1 only."""
