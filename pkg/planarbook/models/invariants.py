"""Values produced by the invariant computations."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class AbelianGroup(BaseModel):
    """Finitely generated abelian group ``Z^free_rank + sum Z/d_i``."""

    model_config = ConfigDict(frozen=True)

    free_rank: int = Field(default=0, ge=0)
    torsion: Tuple[int, ...] = ()

    @field_validator("torsion")
    @classmethod
    def _divisibility_chain(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(d <= 1 for d in value):
            raise ValueError("torsion coefficients must exceed 1")
        if any(b % a for a, b in zip(value, value[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")
        return value

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> Optional[int]:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


class HomotopyData(BaseModel):
    """d2 difference class and d3 invariant of a plane field."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d2_class: Tuple[int, ...] = ()
    d3: Optional[Fraction] = None

    @field_validator("d3")
    @classmethod
    def _half_integer(cls, value: Optional[Fraction]) -> Optional[Fraction]:
        if value is not None and (2 * value).denominator != 1:
            raise ValueError("d3 must be a half-integer")
        return value


__all__ = ["AbelianGroup", "HomotopyData"]
