"""First homology, the d3 invariant and d2 bookkeeping."""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterator, List, Sequence, Tuple

from ..core import (
    SEARCH_LK_BOUND,
    SEARCH_MAX_COMPONENTS,
    SEARCH_ROT_BOUND,
    SEARCH_TB_BOUND,
)
from ..core.errors import DegeneratePresentation, NoTrackingState, UndefinedD3
from ..models import (
    AbelianGroup,
    ContactSurgeryRecord,
    HomotopyData,
    LinkingPresentation,
    OpenBook,
    SurgeryComponent,
)
from .linalg import (
    adjugate_pairing,
    cokernel,
    determinant,
    signature,
    small_determinant,
    small_signature,
    solve_rational,
)
from .records import topological_linking_matrix

logger = logging.getLogger(__name__)


def first_homology(presentation: LinkingPresentation) -> AbelianGroup:
    """Cokernel of the surgery matrix in invariant-factor form."""

    free_rank, torsion = cokernel(presentation.matrix, presentation.size)
    return AbelianGroup(free_rank=free_rank, torsion=torsion)


def presents_homology_sphere(presentation: LinkingPresentation) -> bool:
    return abs(determinant(presentation.matrix)) == 1


def _d3_of_trace(matrix: Sequence[Sequence[int]], rot: Sequence[int], plus: int) -> Fraction:
    """``(c^2 - 3 sigma - 2 chi) / 4 + q`` for the trace with linking matrix ``matrix``."""

    det = small_determinant(matrix)
    if det == 0:
        raise DegeneratePresentation("topological linking matrix is singular")
    if len(matrix) <= 3:
        c1_squared = Fraction(adjugate_pairing(matrix, rot), det)
        sigma = small_signature(matrix)
    else:
        x = solve_rational(matrix, rot)
        c1_squared = sum((xi * ri for xi, ri in zip(x, rot)), Fraction(0))
        sigma = signature(matrix)
    euler = 1 + len(matrix)
    return (c1_squared - 3 * sigma - 2 * euler) / 4 + plus


def d3_invariant(record: ContactSurgeryRecord) -> Fraction:
    """Three-dimensional invariant of the contact structure given by ``record``.

    Evaluates ``(c^2 - 3 sigma - 2 chi) / 4 + q`` on the surgery trace, where
    ``c^2 = x . rot`` for ``L x = rot`` and ``q`` counts the +1 surgeries.
    """

    return _d3_of_trace(
        topological_linking_matrix(record),
        [component.rot for component in record.components],
        sum(1 for component in record.components if component.coeff == 1),
    )


def d2_difference(ob: OpenBook) -> Tuple[int, ...]:
    if ob.lutz is None:
        raise NoTrackingState("open book carries no d2 tracking state")
    return ob.lutz.delta


def homotopy_data(ob: OpenBook) -> HomotopyData:
    """d2 difference and d3 of an open book, leaving out whatever is unavailable."""

    d2 = ob.lutz.delta if ob.lutz is not None else ()
    d3 = None
    if ob.record is not None:
        if abs(small_determinant(topological_linking_matrix(ob.record))) == 1:
            d3 = d3_invariant(ob.record)
        else:
            logger.debug("record does not give an integral homology sphere; d3 left undefined")
    return HomotopyData(d2_class=d2, d3=d3)


def same_homotopy_class(a: HomotopyData, b: HomotopyData) -> bool:
    if a.d3 is None or b.d3 is None:
        raise UndefinedD3("both plane fields need a d3 value")
    return a.d2_class == b.d2_class and a.d3 == b.d3


def _candidate_components(tb_bound: int, rot_bound: int) -> List[SurgeryComponent]:
    return [
        SurgeryComponent(tb=tb, rot=rot, coeff=coeff)
        for tb in range(-tb_bound, tb_bound + 1)
        for rot in range(-rot_bound, rot_bound + 1)
        if (tb + rot) % 2 == 1
        for coeff in (-1, 1)
    ]


def _trace_determinant(framings: Sequence[int], values: Sequence[int]) -> int:
    """Determinant of the linking matrix from its diagonal and its upper entries in pair order."""

    count = len(framings)
    if count == 0:
        return 1
    if count == 1:
        return framings[0]
    if count == 2:
        return framings[0] * framings[1] - values[0] ** 2
    if count == 3:
        a, b, c = values
        f0, f1, f2 = framings
        return f0 * f1 * f2 + 2 * a * b * c - f0 * c * c - f1 * b * b - f2 * a * a
    return small_determinant(_linking_rows(framings, values))


def _linking_rows(diagonal: Sequence[int], values: Sequence[int]) -> List[List[int]]:
    count = len(diagonal)
    rows = [[0] * count for _ in range(count)]
    for (i, j), value in zip(combinations(range(count), 2), values):
        rows[i][j] = rows[j][i] = value
    for i, entry in enumerate(diagonal):
        rows[i][i] = entry
    return rows


def _symmetries(components: Sequence[SurgeryComponent]) -> List[List[int]]:
    """Reindexings of the linking values under nontrivial swaps of equal components."""

    count = len(components)
    pairs = list(combinations(range(count), 2))
    position = {pair: k for k, pair in enumerate(pairs)}
    reindexings = []
    for perm in permutations(range(count)):
        if list(perm) == list(range(count)):
            continue
        if all(components[perm[i]] == components[i] for i in range(count)):
            reindexings.append(
                [position[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
            )
    return reindexings


def search_records(
    target: Fraction,
    max_components: int = SEARCH_MAX_COMPONENTS,
    tb_bound: int = SEARCH_TB_BOUND,
    rot_bound: int = SEARCH_ROT_BOUND,
    lk_bound: int = SEARCH_LK_BOUND,
) -> Iterator[ContactSurgeryRecord]:
    """Lazily yield records of homology spheres whose d3 equals ``target``.

    Records are produced by increasing component count, then over sorted
    component tuples and linking values in lexicographic order. Linking
    values that only swap equal components are visited once, in their
    lexicographically smallest form.
    """

    target = Fraction(target)
    candidates = _candidate_components(tb_bound, rot_bound)
    values = range(-lk_bound, lk_bound + 1)
    visited = 0
    for count in range(max_components + 1):
        pairs = count * (count - 1) // 2
        for components in combinations_with_replacement(candidates, count):
            framings = [component.framing for component in components]
            rot = [component.rot for component in components]
            plus = sum(1 for component in components if component.coeff == 1)
            symmetries = _symmetries(components)
            for linking_values in product(values, repeat=pairs):
                if symmetries and any(
                    tuple(linking_values[k] for k in reindexing) < linking_values
                    for reindexing in symmetries
                ):
                    continue
                visited += 1
                if abs(_trace_determinant(framings, linking_values)) != 1:
                    continue
                matrix = _linking_rows(framings, linking_values)
                if _d3_of_trace(matrix, rot, plus) != target:
                    continue
                logger.debug("record search hit after %d candidates", visited)
                yield ContactSurgeryRecord(
                    components=components,
                    linking=tuple(tuple(row) for row in _linking_rows([0] * count, linking_values)),
                )
        logger.debug("record search finished %d-component records", count)


__all__ = [
    "d2_difference",
    "d3_invariant",
    "first_homology",
    "homotopy_data",
    "presents_homology_sphere",
    "same_homotopy_class",
    "search_records",
]
