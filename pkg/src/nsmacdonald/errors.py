"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed user input: Cartan type, weight, Weyl word."""


class InvariantViolation(RuntimeError):
    """A mathematical invariant that must hold was found broken."""
