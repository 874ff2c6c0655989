"""Exception hierarchy shared by the library, the CLI and the HTTP routers."""

from __future__ import annotations


class PlanarBookError(Exception):
    """Base class for every error raised on purpose by this package."""


class DomainError(PlanarBookError):
    """A well-formed input violates a mathematical precondition."""


class EmptyCurve(DomainError):
    """A curve must enclose at least one hole."""


class HoleOutOfRange(DomainError):
    """A hole index does not exist on the page."""


class NonLaminarWord(DomainError):
    """The monodromy word contains two interleaved curves."""


class UntrackedCurve(DomainError):
    """The contact record has no Legendrian data for the curve."""


class NoTrackingState(DomainError):
    """The open book does not carry d2 tracking."""


class DegeneratePresentation(DomainError):
    """The topological linking matrix of a surgery record is singular."""


class UndefinedD3(DomainError):
    """A d3 value is needed but was not computed."""


class NotSymmetric(DomainError):
    """A matrix that must be symmetric is not."""


class NotNegativeDefinite(DomainError):
    """An intersection form that must be negative definite is not."""


class NotUnimodular(DomainError):
    """An intersection form that must have determinant +-1 does not."""


class NotLegendrian(DomainError):
    """A record that must only contain -1 surgeries has a +1 surgery."""


class AsymmetricLinking(DomainError):
    """Two linking entries for the same pair of components disagree."""


class ResourceExceeded(DomainError):
    """An exact enumeration hit its node budget or rank cap."""


class ParseError(PlanarBookError):
    """Text that does not follow a document grammar."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


__all__ = [
    "AsymmetricLinking",
    "DegeneratePresentation",
    "DomainError",
    "EmptyCurve",
    "HoleOutOfRange",
    "NoTrackingState",
    "NonLaminarWord",
    "NotLegendrian",
    "NotNegativeDefinite",
    "NotSymmetric",
    "NotUnimodular",
    "ParseError",
    "PlanarBookError",
    "ResourceExceeded",
    "UndefinedD3",
    "UntrackedCurve",
]
