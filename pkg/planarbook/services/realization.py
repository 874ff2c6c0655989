"""Planar open books for overtwisted contact structures with prescribed invariants."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from ..models import Curve, OpenBook
from .openbooks import (
    identity_open_book,
    murasugi_sum,
    positive_stabilization,
    stabilize_once_for_legendrian,
    start_tracking,
)
from .presentation import contact_surgery_on_page_curve, lutz_twist

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def block_half() -> OpenBook:
    """Overtwisted S^3 with d3 = 1/2.

    +1 contact surgery on a once positively stabilized Legendrian unknot,
    giving the word ``D+{1} D+{2} D-{1,2}`` on a two-holed page.
    """

    disk = identity_open_book(0)
    annulus, hole = positive_stabilization(disk)
    page, stabilized = stabilize_once_for_legendrian(annulus, Curve(enclosed={hole}), 1)
    return contact_surgery_on_page_curve(page, stabilized, 1)


@lru_cache(maxsize=None)
def block_neg_three_half() -> OpenBook:
    """Overtwisted S^3 with d3 = -3/2.

    Two components on a four-holed page: -1 surgery on the unknot stabilized
    twice negatively from S_+(U), then +1 surgery on S_+(U) itself. The pair
    links -2 and the trace is unimodular.
    """

    disk = identity_open_book(0)
    annulus, hole = positive_stabilization(disk)
    book, once = stabilize_once_for_legendrian(annulus, Curve(enclosed={hole}), 1)
    book, twice = stabilize_once_for_legendrian(book, once, -1)
    book, thrice = stabilize_once_for_legendrian(book, twice, -1)
    book = contact_surgery_on_page_curve(book, thrice, -1)
    return contact_surgery_on_page_curve(book, once, 1)


def plan_d3_steps(target: Fraction) -> Tuple[int, int]:
    """Block counts ``(k1, k2)`` whose sum has d3 = ``k1 - k2 - 1/2`` equal to ``target``."""

    target = Fraction(target)
    shifted = target + Fraction(1, 2)
    if shifted.denominator != 1:
        raise ValueError(f"d3 target {target} is not a half-integer")
    steps = int(shifted)
    if steps > 0:
        return steps, 0
    if steps < 0:
        return 0, -steps
    # The tight structure also has d3 = -1/2; one of each block stays overtwisted.
    return 1, 1


def realize_overtwisted(
    base: OpenBook,
    d2_delta: Sequence[int],
    d3_steps: Tuple[int, int],
) -> OpenBook:
    """Planar open book for an overtwisted structure on the base manifold.

    Lutz twists along the hole generators realize ``d2_delta``; Murasugi sums
    with ``k1`` copies of the d3 = 1/2 block and ``k2`` copies of the
    d3 = -3/2 block adjust d3.
    """

    if len(d2_delta) != base.page.holes:
        raise ValueError("d2 delta needs one entry per hole of the base page")
    k1, k2 = d3_steps
    if k1 < 0 or k2 < 0:
        raise ValueError("block counts must be nonnegative")

    result = start_tracking(base)
    for index, amount in enumerate(d2_delta, start=1):
        orientation = 1 if amount > 0 else -1
        for _ in range(abs(amount)):
            result = lutz_twist(result, Curve(enclosed={index}), orientation)

    for block in [block_half()] * k1 + [block_neg_three_half()] * k2:
        result = murasugi_sum(result, block)
    logger.debug(
        "realized d2 delta %s with blocks (%d, %d); word length %d",
        tuple(d2_delta),
        k1,
        k2,
        result.word_length,
    )
    return result


__all__ = [
    "block_half",
    "block_neg_three_half",
    "plan_d3_steps",
    "realize_overtwisted",
]
