"""Planar pages and isotopy classes of simple closed curves on them."""

from __future__ import annotations

from typing import FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class PlanarPage(BaseModel):
    """Disk with ``holes`` holes; the outer boundary is implicit."""

    model_config = ConfigDict(frozen=True)

    holes: int = Field(ge=0)

    @property
    def hole_indices(self) -> Tuple[int, ...]:
        return tuple(range(1, self.holes + 1))

    @property
    def boundary_components(self) -> int:
        return self.holes + 1


class Curve(BaseModel):
    """Curve on a planar page, identified with the set of holes it encloses."""

    model_config = ConfigDict(frozen=True)

    enclosed: FrozenSet[int]

    @field_validator("enclosed")
    @classmethod
    def _nonempty_positive(cls, value: FrozenSet[int]) -> FrozenSet[int]:
        if not value:
            raise ValueError("a curve must enclose at least one hole")
        if min(value) < 1:
            raise ValueError("hole indices start at 1")
        return value

    @property
    def holes(self) -> Tuple[int, ...]:
        """Enclosed holes in increasing order."""
        return tuple(sorted(self.enclosed))

    def __str__(self) -> str:
        return "{" + ",".join(str(hole) for hole in self.holes) + "}"


__all__ = ["Curve", "PlanarPage"]
