"""Exception types shared across the package."""


class SizeLimitError(ValueError):
    """An enumeration or expansion was requested beyond its cost guard."""


class ParseError(ValueError):
    """Malformed text input; the message names the offending position."""


class InvalidPathError(ValueError):
    """A weighted Motzkin path violates one of its structural invariants."""
