"""Planar pages, curves and their homology classes."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Tuple

from ..core.errors import EmptyCurve, HoleOutOfRange
from ..models import Curve, PlanarPage


def make_page(holes: int) -> PlanarPage:
    if holes < 0:
        raise ValueError("a page has a nonnegative number of holes")
    return PlanarPage(holes=holes)


def check_holes(page: PlanarPage, holes: Iterable[int]) -> None:
    for hole in holes:
        if not 1 <= hole <= page.holes:
            raise HoleOutOfRange(f"hole {hole} is not on a page with {page.holes} holes")


def make_curve(page: PlanarPage, holes: Iterable[int]) -> Curve:
    """Isotopy class of the curve enclosing exactly ``holes``."""

    enclosed = frozenset(holes)
    if not enclosed:
        raise EmptyCurve("a curve enclosing no holes bounds a disk")
    check_holes(page, enclosed)
    return Curve(enclosed=enclosed)


def curve_class(page: PlanarPage, curve: Curve) -> Tuple[int, ...]:
    """Class of ``curve`` in H_1(page) over the hole basis e_1..e_h."""

    check_holes(page, curve.enclosed)
    return tuple(1 if hole in curve.enclosed else 0 for hole in page.hole_indices)


def laminar_pair(a: Curve, b: Curve) -> bool:
    """True when the two classes have disjoint representatives."""

    return (
        a.enclosed <= b.enclosed
        or b.enclosed <= a.enclosed
        or not (a.enclosed & b.enclosed)
    )


def is_laminar_family(curves: Iterable[Curve]) -> bool:
    distinct = set(curves)
    return all(laminar_pair(a, b) for a, b in combinations(distinct, 2))


def relabel_curve(curve: Curve, permutation: Mapping[int, int]) -> Curve:
    return Curve(enclosed=frozenset(permutation.get(hole, hole) for hole in curve.enclosed))


__all__ = [
    "check_holes",
    "curve_class",
    "is_laminar_family",
    "laminar_pair",
    "make_curve",
    "make_page",
    "relabel_curve",
]
