"""Exception types shared across the package."""


class OrdineqError(Exception):
    """Base class for all package errors."""


class ParseError(OrdineqError):
    """Malformed textual input (rationals, game/profile documents, DIMACS)."""


class ValidationError(OrdineqError):
    """Structurally well-formed input that violates a model invariant."""


class MalformedLp(OrdineqError):
    """Dimension mismatch or bad relation in a LinearProgram; caller bug."""


class UnknownOutcome(OrdineqError):
    """A utility vector or constraint references an outcome the game lacks."""


class UnsupportedSpace(OrdineqError):
    """The requested operation is not defined for this type-space kind."""


class CapExceeded(OrdineqError):
    """An enumeration would exceed the configured cap; raised rather than
    silently truncating, since exhaustiveness is a correctness property."""
