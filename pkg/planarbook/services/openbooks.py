"""Monodromy words on planar pages and the open book moves."""

from __future__ import annotations

import logging
from typing import Any, Iterable, Mapping, Optional, Tuple

from ..models import (
    ContactSurgeryRecord,
    Curve,
    LegendrianKnot,
    LegendrianPage,
    LutzTracker,
    OpenBook,
    PlanarPage,
    TwistLetter,
)
from .linalg import block_sum
from .pages import check_holes, make_page, relabel_curve
from .records import split_union

logger = logging.getLogger(__name__)

# The core of a Hopf band plumbed onto a page is a Legendrian unknot.
HOPF_CORE = LegendrianKnot(tb=-1, rot=0)


def _rebuild(ob: OpenBook, **changes: Any) -> OpenBook:
    return OpenBook.model_validate({**dict(ob), **changes})


def _fresh_tracker(holes: int) -> LutzTracker:
    return LutzTracker(
        basis=holes,
        hole_classes=tuple(
            tuple(1 if i == j else 0 for j in range(holes)) for i in range(holes)
        ),
        delta=(0,) * holes,
    )


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError("twist sign must be +1 or -1")


def identity_open_book(holes: int) -> OpenBook:
    """Identity monodromy on an ``holes``-holed disk.

    The disk itself is the open book of S^3 with its standard contact
    structure, so it starts the contact surgery pipeline with an empty record.
    """

    page = make_page(holes)
    record: Optional[ContactSurgeryRecord] = None
    legendrian: Optional[LegendrianPage] = None
    if holes == 0:
        record = ContactSurgeryRecord()
        legendrian = LegendrianPage()
    return OpenBook(page=page, record=record, legendrian=legendrian, lutz=_fresh_tracker(holes))


def start_tracking(ob: OpenBook) -> OpenBook:
    """Begin d2 bookkeeping with the current page as base."""

    if ob.lutz is not None:
        return ob
    return _rebuild(ob, lutz=_fresh_tracker(ob.page.holes))


def append_twist(ob: OpenBook, curve: Curve, sign: int) -> OpenBook:
    check_holes(ob.page, curve.enclosed)
    _check_sign(sign)
    return _rebuild(ob, word=ob.word + (TwistLetter(curve=curve, sign=sign),))


def _stabilized_seifert(
    seifert: Tuple[Tuple[int, ...], ...], through: frozenset
) -> Tuple[Tuple[int, ...], ...]:
    """Seifert form after plumbing a positive Hopf band whose core is e_T + e_new.

    The core has self-linking -1 and is orthogonal to the old page, so in the
    hole basis the new hole pairs with e_i as ``-theta(e_T, e_i)``.
    """

    size = len(seifert)
    column = [-sum(seifert[t - 1][i] for t in through) for i in range(size)]
    corner = sum(seifert[s - 1][t - 1] for s in through for t in through) - 1
    rows = [tuple(seifert[i]) + (column[i],) for i in range(size)]
    rows.append(tuple(column) + (corner,))
    return tuple(rows)


def _stabilize(ob: OpenBook, through: Iterable[int], sign: int) -> Tuple[OpenBook, int]:
    through = frozenset(through)
    check_holes(ob.page, through)
    new_hole = ob.page.holes + 1
    core = Curve(enclosed=through | {new_hole})
    word = ob.word + (TwistLetter(curve=core, sign=sign),)

    lutz = None
    if ob.lutz is not None:
        basis = ob.lutz.basis
        # The new twist identifies the new hole with -e_T in H_1(M).
        new_class = tuple(
            -sum(ob.lutz.hole_classes[t - 1][k] for t in through) for k in range(basis)
        )
        lutz = LutzTracker(
            basis=basis,
            hole_classes=ob.lutz.hole_classes + (new_class,),
            delta=ob.lutz.delta,
        )

    record, legendrian = ob.record, ob.legendrian
    if sign < 0:
        # A negative stabilization changes the supported contact structure.
        record = legendrian = None
    elif legendrian is not None:
        legendrian = LegendrianPage(
            seifert=_stabilized_seifert(legendrian.seifert, through),
            knots=legendrian.knots + ((core, HOPF_CORE),),
            surgery_curves=legendrian.surgery_curves,
        )

    logger.debug(
        "%s stabilization through %s adds hole %d",
        "positive" if sign > 0 else "negative",
        sorted(through),
        new_hole,
    )
    stabilized = OpenBook(
        page=PlanarPage(holes=new_hole),
        word=word,
        record=record,
        legendrian=legendrian,
        lutz=lutz,
    )
    return stabilized, new_hole


def positive_stabilization(ob: OpenBook, through: Iterable[int] = ()) -> Tuple[OpenBook, int]:
    """Plumb a positive Hopf band; the twist curve encloses ``through`` and the new hole."""

    return _stabilize(ob, through, 1)


def negative_stabilization(ob: OpenBook, through: Iterable[int] = ()) -> Tuple[OpenBook, int]:
    return _stabilize(ob, through, -1)


def stabilize_once_for_legendrian(ob: OpenBook, curve: Curve, sign: int) -> Tuple[OpenBook, Curve]:
    """Stabilize the open book once so that S_sign(curve) lies on the page."""

    check_holes(ob.page, curve.enclosed)
    _check_sign(sign)
    stabilized, new_hole = positive_stabilization(ob)
    pushed = Curve(enclosed=curve.enclosed | {new_hole})
    legendrian = stabilized.legendrian
    if legendrian is not None:
        knot = legendrian.knot(curve)
        if knot is not None:
            legendrian = LegendrianPage(
                seifert=legendrian.seifert,
                knots=legendrian.knots + ((pushed, knot.stabilized(sign)),),
                surgery_curves=legendrian.surgery_curves,
            )
            stabilized = _rebuild(stabilized, legendrian=legendrian)
    return stabilized, pushed


def stabilize_for_legendrian(ob: OpenBook, curve: Curve) -> Tuple[OpenBook, Curve, Curve]:
    """Stabilize twice so that both S_+(curve) and S_-(curve) appear on the page."""

    once, splus = stabilize_once_for_legendrian(ob, curve, 1)
    twice, sminus = stabilize_once_for_legendrian(once, curve, -1)
    return twice, splus, sminus


def _shift(curve: Curve, offset: int) -> Curve:
    return Curve(enclosed=frozenset(hole + offset for hole in curve.enclosed))


def murasugi_sum(a: OpenBook, b: OpenBook) -> OpenBook:
    """Boundary-connected Murasugi sum: b's holes follow a's and the words compose."""

    offset = a.page.holes
    word = a.word + tuple(
        TwistLetter(curve=_shift(letter.curve, offset), sign=letter.sign) for letter in b.word
    )

    record = legendrian = None
    if a.record is not None and b.record is not None:
        record = split_union(a.record, b.record)
        if a.legendrian is not None and b.legendrian is not None:
            legendrian = LegendrianPage(
                seifert=block_sum(a.legendrian.seifert, b.legendrian.seifert),
                knots=a.legendrian.knots
                + tuple((_shift(curve, offset), knot) for curve, knot in b.legendrian.knots),
                surgery_curves=a.legendrian.surgery_curves
                + tuple(_shift(curve, offset) for curve in b.legendrian.surgery_curves),
            )

    lutz = None
    if a.lutz is not None and b.lutz is not None:
        lutz = LutzTracker(
            basis=a.lutz.basis + b.lutz.basis,
            hole_classes=tuple(row + (0,) * b.lutz.basis for row in a.lutz.hole_classes)
            + tuple((0,) * a.lutz.basis + row for row in b.lutz.hole_classes),
            delta=a.lutz.delta + b.lutz.delta,
        )

    return OpenBook(
        page=PlanarPage(holes=a.page.holes + b.page.holes),
        word=word,
        record=record,
        legendrian=legendrian,
        lutz=lutz,
    )


def relabel_holes(ob: OpenBook, permutation: Mapping[int, int]) -> OpenBook:
    """Rename hole ``i`` to ``permutation[i]`` everywhere in the open book."""

    holes = ob.page.hole_indices
    if sorted(permutation.get(i, i) for i in holes) != list(holes):
        raise ValueError("relabeling must permute the holes of the page")
    target = {i: permutation.get(i, i) for i in holes}
    inverse = {new: old for old, new in target.items()}

    word = tuple(
        TwistLetter(curve=relabel_curve(letter.curve, target), sign=letter.sign)
        for letter in ob.word
    )
    legendrian = None
    if ob.legendrian is not None:
        seifert = ob.legendrian.seifert
        legendrian = LegendrianPage(
            seifert=tuple(
                tuple(seifert[inverse[i] - 1][inverse[j] - 1] for j in holes) for i in holes
            ),
            knots=tuple(
                (relabel_curve(curve, target), knot) for curve, knot in ob.legendrian.knots
            ),
            surgery_curves=tuple(
                relabel_curve(curve, target) for curve in ob.legendrian.surgery_curves
            ),
        )
    lutz = None
    if ob.lutz is not None:
        lutz = LutzTracker(
            basis=ob.lutz.basis,
            hole_classes=tuple(ob.lutz.hole_classes[inverse[i] - 1] for i in holes),
            delta=ob.lutz.delta,
        )
    return _rebuild(ob, word=word, legendrian=legendrian, lutz=lutz)


__all__ = [
    "HOPF_CORE",
    "append_twist",
    "identity_open_book",
    "murasugi_sum",
    "negative_stabilization",
    "positive_stabilization",
    "relabel_holes",
    "stabilize_for_legendrian",
    "stabilize_once_for_legendrian",
    "start_tracking",
]
