"""Intersection forms of fillings and the planarity obstruction."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core import NODE_BUDGET, RANK_CAP
from ..core.errors import (
    NotLegendrian,
    NotNegativeDefinite,
    NotUnimodular,
    ResourceExceeded,
)
from ..models import ContactSurgeryRecord, IntersectionForm, PlanarVerdict
from .linalg import as_tuple_matrix, block_sum, cokernel, determinant, inertia_of, require_symmetric

logger = logging.getLogger(__name__)

# Dynkin diagram of E8: a chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def make_form(
    matrix: Sequence[Sequence[int]],
    boundary_components: int = 1,
    boundary_is_homology_sphere: bool = False,
) -> IntersectionForm:
    require_symmetric(matrix)
    return IntersectionForm(
        matrix=as_tuple_matrix(matrix),
        boundary_components=boundary_components,
        boundary_is_homology_sphere=boundary_is_homology_sphere,
    )


def negative_e8() -> IntersectionForm:
    rows = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        rows[i][j] = rows[j][i] = 1
    return make_form(rows)


def direct_sum(first: IntersectionForm, second: IntersectionForm) -> IntersectionForm:
    """Orthogonal sum; the boundary data of ``first`` is kept (``second`` is closed, as in a blow-up)."""

    return make_form(
        block_sum(first.matrix, second.matrix),
        first.boundary_components,
        first.boundary_is_homology_sphere,
    )


def inertia(form: IntersectionForm) -> Tuple[int, int, int]:
    """``(b2+, b2-, b2^0)`` of the form."""

    return inertia_of(form.matrix)


def _pohst_coefficients(gram: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Quadratic-completion coefficients: ``Q(x) = sum q_ii (x_i + sum_{j>i} q_ij x_j)^2``."""

    n = len(gram)
    q = [[Fraction(entry) for entry in row] for row in gram]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for m in range(k, n):
                q[k][m] -= q[k][i] * q[i][m]
    return q


def short_vectors(
    form: IntersectionForm,
    norm: int,
    node_budget: Optional[int] = None,
) -> List[Tuple[int, ...]]:
    """Vectors ``v`` with ``-v^T Q v == norm`` on a negative definite form.

    One representative of each +-pair is returned, the one whose first
    nonzero coordinate is positive.
    """

    _require_negative_definite(form)
    n = form.rank
    if n > RANK_CAP:
        raise ResourceExceeded(f"rank {n} exceeds the enumeration cap of {RANK_CAP}")
    budget = NODE_BUDGET if node_budget is None else node_budget
    gram = [[-entry for entry in row] for row in form.matrix]
    q = _pohst_coefficients(gram)
    target = Fraction(norm)

    found: List[Tuple[int, ...]] = []
    x = [0] * n
    nodes = 0

    def visit(i: int, remaining: Fraction) -> None:
        nonlocal nodes
        if i < 0:
            if remaining == 0 and any(x):
                vector = tuple(x)
                first = next(value for value in vector if value)
                if first > 0:
                    found.append(vector)
            return
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        reach = math.isqrt(math.floor(remaining / q[i][i])) + 1
        for value in range(math.floor(center) - reach, math.ceil(center) + reach + 1):
            step = q[i][i] * (value - center) ** 2
            if step > remaining:
                continue
            nodes += 1
            if nodes > budget:
                raise ResourceExceeded(f"short-vector enumeration exceeded {budget} nodes")
            x[i] = value
            visit(i - 1, remaining - step)
        x[i] = 0

    if n:
        visit(n - 1, target)
    logger.debug("short-vector enumeration of norm %d: %d nodes, %d vectors", norm, nodes, len(found))
    return sorted(found)


def _require_negative_definite(form: IntersectionForm) -> None:
    b2plus, b2minus, b2zero = inertia(form)
    if b2plus or b2zero:
        raise NotNegativeDefinite(f"form has inertia ({b2plus}, {b2minus}, {b2zero})")


def is_diagonalizable(form: IntersectionForm) -> bool:
    """Whether a negative definite unimodular form is congruent to ``diag(-1, ..., -1)``.

    The norm -1 vectors split off as a diagonal summand; the form is diagonal
    exactly when they span the whole lattice.
    """

    _require_negative_definite(form)
    if abs(determinant(form.matrix)) != 1:
        raise NotUnimodular("diagonalizability is decided for unimodular forms only")
    n = form.rank
    if n == 0:
        return True
    vectors = short_vectors(form, 1)
    if not vectors:
        return False
    columns = tuple(tuple(vector[i] for vector in vectors) for i in range(n))
    free_rank, torsion = cokernel(columns, n)
    return free_rank == 0 and not torsion


def legendrian_filling_form(record: ContactSurgeryRecord) -> IntersectionForm:
    """Intersection form of the trace of Legendrian surgery on ``record``.

    The boundary is an integral homology sphere exactly when the form is unimodular.
    """

    if any(component.coeff != -1 for component in record.components):
        raise NotLegendrian("Legendrian surgery needs every coefficient to be -1")
    matrix = tuple(
        tuple(
            component.tb - 1 if i == j else record.linking[i][j]
            for j in range(record.size)
        )
        for i, component in enumerate(record.components)
    )
    return make_form(matrix, boundary_is_homology_sphere=abs(determinant(matrix)) == 1)


def planar_support_verdict(form: IntersectionForm) -> PlanarVerdict:
    """Whether this filling rules out a planar open book for the filled structure.

    Obstructed is conclusive; Unobstructed only means this filling says nothing.
    """

    b2plus, _, b2zero = inertia(form)
    reasons = []
    if b2plus:
        reasons.append("positive part")
    if b2zero:
        reasons.append("degenerate part")
    if form.boundary_components > 1:
        reasons.append("disconnected boundary")
    if form.boundary_is_homology_sphere and not b2plus and not b2zero:
        if not is_diagonalizable(form):
            reasons.append("non-diagonalizable")
    if reasons:
        return PlanarVerdict(status="Obstructed", reasons=tuple(reasons))
    return PlanarVerdict(status="Unobstructed")


__all__ = [
    "direct_sum",
    "inertia",
    "is_diagonalizable",
    "legendrian_filling_form",
    "make_form",
    "negative_e8",
    "planar_support_verdict",
    "short_vectors",
]
