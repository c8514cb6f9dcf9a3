"""Semantic exception hierarchy.

Every error the library raises on bad input derives from FuzzmarkError, so
callers (notably the CLI) can distinguish data problems from genuine bugs.
"""


class FuzzmarkError(Exception):
    """Base class for all fuzzmark domain errors."""


class EmptyDistribution(FuzzmarkError):
    """No mass anywhere: all weights zero, empty input, or total mass zero."""


class NegativeWeight(FuzzmarkError):
    """A weight, count, mass, or density that must be nonnegative is not."""


class ShapeMismatch(FuzzmarkError):
    """Lengths, labels, or indices do not line up with what was expected."""


class NotNormalized(FuzzmarkError):
    """Degrees or weights that must sum to 1 do not."""


class InvalidGeometry(FuzzmarkError):
    """Geometric parameters violate the model (nonpositive base, a > b, ...)."""


class WrongModel(FuzzmarkError):
    """An operation was asked to run under a model kind it does not support."""


class IncomparableCohorts(FuzzmarkError):
    """Cohorts under different models or level counts cannot be ranked."""


class DegenerateFigure(FuzzmarkError):
    """A figure with (near-)zero area has no well-defined centroid."""


class ParseError(FuzzmarkError):
    """Malformed roster or scheme input. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class RangeError(ParseError):
    """A parsed score lies outside the [0, 100] scale."""


class DuplicateStudent(ParseError):
    """The same student id appears more than once in a roster."""
