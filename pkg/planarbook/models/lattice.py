"""Intersection forms of fillings and planarity verdicts."""

from __future__ import annotations

from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .surgery import Matrix

Reason = Literal[
    "positive part",
    "degenerate part",
    "disconnected boundary",
    "non-diagonalizable",
]


class IntersectionForm(BaseModel):
    """Intersection form of a 4-manifold on H_2, with boundary data."""

    model_config = ConfigDict(frozen=True)

    matrix: Matrix
    boundary_components: int = Field(default=1, ge=1)
    boundary_is_homology_sphere: bool = False

    @model_validator(mode="after")
    def _check_square(self) -> "IntersectionForm":
        if any(len(row) != len(self.matrix) for row in self.matrix):
            raise ValueError("intersection form must be a square matrix")
        return self

    @property
    def rank(self) -> int:
        return len(self.matrix)


class PlanarVerdict(BaseModel):
    """Outcome of the filling obstruction; Unobstructed is inconclusive."""

    model_config = ConfigDict(frozen=True)

    status: Literal["Obstructed", "Unobstructed"]
    reasons: Tuple[Reason, ...] = ()

    @model_validator(mode="after")
    def _status_matches_reasons(self) -> "PlanarVerdict":
        if (self.status == "Obstructed") != bool(self.reasons):
            raise ValueError("a verdict is Obstructed exactly when it has reasons")
        return self

    @property
    def obstructed(self) -> bool:
        return self.status == "Obstructed"


__all__ = ["IntersectionForm", "PlanarVerdict", "Reason"]
