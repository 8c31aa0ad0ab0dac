"""Exception types shared across the package."""


class ParseError(ValueError):
    """A text input (permutation, matrix, basis, downset, rectangle list) is malformed."""


class ResourceLimitError(RuntimeError):
    """An enumeration exceeded its configured cap on stored permutations."""


class StabilisationError(RuntimeError):
    """A finite-difference fit did not stabilise within the requested window."""
