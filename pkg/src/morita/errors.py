"""Exception hierarchy.

Every failure mode that user code may want to catch gets its own class; they
all derive from MoritaError so a bare ``except MoritaError`` catches anything
raised deliberately by this library.
"""

from __future__ import annotations


class MoritaError(Exception):
    """Base class for all errors raised by this library."""


class EndpointMismatch(MoritaError):
    """Composition or comparison of morphisms whose endpoints do not meet."""


class ArityMismatch(MoritaError):
    """A structure isomorphism was requested with the wrong number of objects."""


class NotParallel(MoritaError):
    """A coequalizer/equalizer was requested for maps that are not parallel."""


class NotCocone(MoritaError):
    """The map handed to coinduce does not coequalize the pair (or dually)."""


class NotPrime(MoritaError):
    """Modulus of a matrix instance must be prime."""


class MissingColimit(MoritaError):
    """The wrapped instance lacks the (co)limits needed by a combinator."""


class MonoidMismatch(MoritaError):
    """Bimodules composed over different middle monoids."""


class ShapeMismatch(MoritaError):
    """Carrier/action endpoints do not line up when building algebra data."""


class IndexOutOfRange(MoritaError):
    """Face or degeneracy index outside the simplex dimension."""


class BoundaryMismatch(MoritaError):
    """Cells glued along faces that are not literally equal."""


class MissingWitness(MoritaError):
    """An operation needed an equivalence witness that was not supplied."""


class MarkingViolation(MoritaError):
    """Horn/thinness hypotheses demand a marking the input does not carry."""


class EquationFailure(MoritaError):
    """A composite equation that the construction guarantees did not hold."""


class UnsupportedInstance(MoritaError):
    """The requested operation has no implementation for this instance kind."""


class ParseError(MoritaError):
    """Malformed instance file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ValidationError(MoritaError):
    """Declared data failed its validator on load."""

    def __init__(self, entity: str, report):
        super().__init__(f"validation failed for {entity!r}:\n{report.render()}")
        self.entity = entity
        self.report = report


class UnknownCommand(MoritaError):
    """CLI dispatch got a command it does not know."""
