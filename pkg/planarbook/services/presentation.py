"""Surgery presentations of planar open books and contact surgery on page curves."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Sequence

from ..core.errors import NonLaminarWord, UntrackedCurve
from ..models import (
    Curve,
    LegendrianPage,
    LinkingPresentation,
    LutzTracker,
    OpenBook,
    SurgeryComponent,
)
from .openbooks import _rebuild, append_twist, stabilize_for_legendrian
from .pages import check_holes, curve_class, laminar_pair
from .records import (
    append_component,
    split_union,
    stabilize_legendrian_record,
    topological_linking_matrix,
)

logger = logging.getLogger(__name__)


def to_linking_presentation(ob: OpenBook) -> LinkingPresentation:
    """Integer surgery diagram of the open book's 3-manifold.

    Holes are 0-framed split unknots; each letter is a page-framed unknot with
    framing ``-sign`` that links the holes it encloses once and the other
    letters not at all.
    """

    curves = sorted({letter.curve for letter in ob.word}, key=lambda c: c.holes)
    for a, b in combinations(curves, 2):
        if not laminar_pair(a, b):
            raise NonLaminarWord(f"twist curves {a} and {b} interleave")

    holes = ob.page.holes
    size = holes + len(ob.word)
    rows = [[0] * size for _ in range(size)]
    for index, letter in enumerate(ob.word):
        row = holes + index
        rows[row][row] = -letter.sign
        for hole in letter.curve.enclosed:
            rows[row][hole - 1] = rows[hole - 1][row] = 1
    return LinkingPresentation(matrix=tuple(tuple(row) for row in rows), holes=holes)


def _seifert_pairing(seifert: Sequence[Sequence[int]], a: Sequence[int], b: Sequence[int]) -> int:
    return sum(a[i] * seifert[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))


def contact_surgery_on_page_curve(ob: OpenBook, curve: Curve, coeff: int) -> OpenBook:
    """Contact (+-1) surgery on a Legendrian realization of a page curve.

    The monodromy gains a twist of sign ``-coeff``. When the open book carries
    a contact surgery record the curve must have tracked Legendrian data, and
    the new component links each earlier one by the Seifert pairing of their
    page classes.
    """

    if coeff not in (1, -1):
        raise ValueError("contact surgery coefficient must be +1 or -1")
    check_holes(ob.page, curve.enclosed)
    result = append_twist(ob, curve, -coeff)
    if ob.record is None:
        return result

    legendrian = ob.legendrian
    knot = legendrian.knot(curve) if legendrian is not None else None
    if legendrian is None or knot is None:
        raise UntrackedCurve(f"no Legendrian realization is tracked for {curve}")

    vector = curve_class(ob.page, curve)
    linking = tuple(
        _seifert_pairing(legendrian.seifert, curve_class(ob.page, other), vector)
        for other in legendrian.surgery_curves
    )
    component = SurgeryComponent(tb=knot.tb, rot=knot.rot, coeff=coeff)
    logger.debug("contact %+d surgery on %s with tb=%d rot=%d", coeff, curve, knot.tb, knot.rot)
    return _rebuild(
        result,
        record=append_component(ob.record, component, linking),
        legendrian=LegendrianPage(
            seifert=legendrian.seifert,
            knots=legendrian.knots,
            surgery_curves=legendrian.surgery_curves + (curve,),
        ),
    )


def lutz_twist(ob: OpenBook, curve: Curve, orientation: int) -> OpenBook:
    """Lutz twist along a transverse push-off of ``curve``.

    Four positive stabilizations put the doubly stabilized copy on the page,
    then +1 contact surgery is done on the curve and on that copy. The d2
    tracker, when present, moves by ``orientation`` times the curve's class.
    """

    if orientation not in (1, -1):
        raise ValueError("Lutz twist orientation must be +1 or -1")
    check_holes(ob.page, curve.enclosed)

    once, splus, sminus = stabilize_for_legendrian(ob, curve)
    first = splus if orientation > 0 else sminus
    twice, splus2, sminus2 = stabilize_for_legendrian(once, first)
    copy = splus2 if orientation > 0 else sminus2

    result = contact_surgery_on_page_curve(twice, curve, 1)
    result = contact_surgery_on_page_curve(result, copy, 1)

    if ob.lutz is not None:
        lutz = result.lutz
        shift = [0] * lutz.basis
        for hole in curve.enclosed:
            for k, value in enumerate(ob.lutz.hole_classes[hole - 1]):
                shift[k] += orientation * value
        result = _rebuild(
            result,
            lutz=LutzTracker(
                basis=lutz.basis,
                hole_classes=lutz.hole_classes,
                delta=tuple(d + s for d, s in zip(lutz.delta, shift)),
            ),
        )
    logger.debug("Lutz twist along %s, orientation %+d, copy %s", curve, orientation, copy)
    return result


__all__ = [
    "contact_surgery_on_page_curve",
    "lutz_twist",
    "split_union",
    "stabilize_legendrian_record",
    "to_linking_presentation",
    "topological_linking_matrix",
]
