class InvariantError(Exception):
    """Base class for everything the invariant calculators raise on purpose."""


class InputError(InvariantError, ValueError):
    """Bad parameters or unparseable input (type strings, words, matrix files)."""


class NumericalError(InvariantError, RuntimeError):
    """A numerical routine failed: no convergence, singular data, broken internal identity."""
