"""Contact surgery records, Legendrian page data and linking presentations."""

from __future__ import annotations

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from .page import Curve

Matrix = Tuple[Tuple[int, ...], ...]


def _is_square(matrix: Matrix) -> bool:
    return all(len(row) == len(matrix) for row in matrix)


def _is_symmetric(matrix: Matrix) -> bool:
    size = len(matrix)
    return all(
        matrix[i][j] == matrix[j][i] for i in range(size) for j in range(i + 1, size)
    )


class LegendrianKnot(BaseModel):
    """Classical invariants of a Legendrian knot."""

    model_config = ConfigDict(frozen=True)

    tb: int
    rot: int

    def stabilized(self, sign: int) -> Self:
        """Add one zig-zag: tb drops by one, rot moves by ``sign``."""
        return self.model_copy(update={"tb": self.tb - 1, "rot": self.rot + sign})


class SurgeryComponent(LegendrianKnot):
    """Component of a contact (+-1) surgery diagram."""

    coeff: Literal[1, -1]

    @property
    def framing(self) -> int:
        """Topological surgery coefficient."""
        return self.tb + self.coeff


class ContactSurgeryRecord(BaseModel):
    """Contact surgery diagram: components plus pairwise linking numbers."""

    model_config = ConfigDict(frozen=True)

    components: Tuple[SurgeryComponent, ...] = ()
    linking: Matrix = ()

    @model_validator(mode="after")
    def _check_linking(self) -> "ContactSurgeryRecord":
        size = len(self.components)
        if len(self.linking) != size or not _is_square(self.linking):
            raise ValueError("linking matrix size must match the component count")
        if not _is_symmetric(self.linking):
            raise ValueError("linking matrix must be symmetric")
        if any(self.linking[i][i] != 0 for i in range(size)):
            raise ValueError("linking matrix must have zero diagonal")
        return self

    @property
    def size(self) -> int:
        return len(self.components)


class LegendrianPage(BaseModel):
    """Legendrian data carried by a page whose open book lives in the S^3 pipeline.

    ``seifert`` is the Seifert form of the page in the hole basis, ``knots``
    records the classical invariants of the page curves realized so far and
    ``surgery_curves`` lists the page curve of every record component, in
    record order.
    """

    model_config = ConfigDict(frozen=True)

    seifert: Matrix = ()
    knots: Tuple[Tuple[Curve, LegendrianKnot], ...] = ()
    surgery_curves: Tuple[Curve, ...] = ()

    @model_validator(mode="after")
    def _check_seifert(self) -> "LegendrianPage":
        if not _is_square(self.seifert) or not _is_symmetric(self.seifert):
            raise ValueError("Seifert form must be a symmetric square matrix")
        return self

    def knot(self, curve: Curve) -> Optional[LegendrianKnot]:
        for known, data in self.knots:
            if known == curve:
                return data
        return None


class LinkingPresentation(BaseModel):
    """Integer surgery matrix: one 0-framed row per hole, then one row per twist."""

    model_config = ConfigDict(frozen=True)

    matrix: Matrix
    holes: int = 0

    @model_validator(mode="after")
    def _check_matrix(self) -> "LinkingPresentation":
        if not _is_square(self.matrix) or not _is_symmetric(self.matrix):
            raise ValueError("presentation matrix must be symmetric")
        if any(self.matrix[i][i] != 0 for i in range(min(self.holes, len(self.matrix)))):
            raise ValueError("hole rows must be 0-framed")
        return self

    @property
    def size(self) -> int:
        return len(self.matrix)


__all__ = [
    "ContactSurgeryRecord",
    "LegendrianKnot",
    "LegendrianPage",
    "LinkingPresentation",
    "Matrix",
    "SurgeryComponent",
]
