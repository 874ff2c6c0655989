"""Planar open books: a page plus a word of signed Dehn twists."""

from __future__ import annotations

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .page import Curve, PlanarPage
from .surgery import ContactSurgeryRecord, LegendrianPage


class TwistLetter(BaseModel):
    """Right-handed (+1) or left-handed (-1) Dehn twist about a page curve."""

    model_config = ConfigDict(frozen=True)

    curve: Curve
    sign: Literal[1, -1]

    def __str__(self) -> str:
        return ("D+" if self.sign > 0 else "D-") + str(self.curve)


class LutzTracker(BaseModel):
    """d2 bookkeeping relative to the page the tracking started on.

    ``hole_classes[i]`` is the class of hole ``i + 1`` written over the base
    basis; ``delta`` is the accumulated difference class.
    """

    model_config = ConfigDict(frozen=True)

    basis: int
    hole_classes: Tuple[Tuple[int, ...], ...]
    delta: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_shapes(self) -> "LutzTracker":
        if len(self.delta) != self.basis:
            raise ValueError("delta must have one entry per base class")
        if any(len(row) != self.basis for row in self.hole_classes):
            raise ValueError("hole classes must be written over the base basis")
        return self


class OpenBook(BaseModel):
    """Open book with planar page; the monodromy word is applied left to right."""

    model_config = ConfigDict(frozen=True)

    page: PlanarPage
    word: Tuple[TwistLetter, ...] = ()
    record: Optional[ContactSurgeryRecord] = None
    legendrian: Optional[LegendrianPage] = None
    lutz: Optional[LutzTracker] = None

    @model_validator(mode="after")
    def _check_curves(self) -> "OpenBook":
        for letter in self.word:
            if max(letter.curve.enclosed) > self.page.holes:
                raise ValueError(f"twist curve {letter.curve} is not on the page")
        if self.legendrian is not None and len(self.legendrian.seifert) != self.page.holes:
            raise ValueError("Seifert form must match the page")
        if self.lutz is not None and len(self.lutz.hole_classes) != self.page.holes:
            raise ValueError("d2 tracker must describe every hole")
        return self

    @property
    def word_length(self) -> int:
        return len(self.word)

    @property
    def is_planar(self) -> bool:
        # Pages are disks with holes, so genus zero is structural.
        return True


__all__ = ["LutzTracker", "OpenBook", "TwistLetter"]
