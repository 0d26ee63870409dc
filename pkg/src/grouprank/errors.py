"""Shared exception types.

The CLI maps these onto its exit-code contract: malformed input exits 2,
a tripped budget guard exits 3, and a failed check exits 1.
"""


class MalformedInputError(ValueError):
    """Input file, flag, or value that cannot be interpreted."""


class BudgetExceededError(RuntimeError):
    """An enumeration or size guard was tripped; raise the guard explicitly."""


class HypothesisError(ValueError):
    """A pipeline precondition on the input matrix/group does not hold."""
