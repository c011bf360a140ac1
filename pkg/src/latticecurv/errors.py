"""Exception hierarchy shared by all modules.

Every error carries the offending values so the CLI can emit them as
machine-readable JSON.
"""

from __future__ import annotations


class LatticeCurvError(Exception):
    """Base class. ``details`` is serialised verbatim by the CLI."""

    exit_code = 2

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self), **self.details}


class ParseError(LatticeCurvError):
    pass


class DuplicatePointError(LatticeCurvError):
    pass


class UndefinedDistanceError(LatticeCurvError):
    pass


class SamplingBudgetError(LatticeCurvError):
    pass


class PlanarityError(LatticeCurvError):
    """Bond range too wide for the configuration: beta >= sqrt(2) * d_min."""


class BondRangeError(LatticeCurvError):
    pass


class TriangulationError(LatticeCurvError):
    """No admissible chord in a face. Indicates a face-walk bug."""

    exit_code = 1


class BoundaryNotSimpleError(LatticeCurvError):
    pass


class PreconditionError(LatticeCurvError):
    pass


class IdentityViolation(LatticeCurvError):
    """An identity that must hold exactly did not. Always an implementation bug."""

    exit_code = 1


class BudgetExceededError(LatticeCurvError):
    pass
