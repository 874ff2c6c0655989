"""Shared builders for the test suite."""

from __future__ import annotations

import os
import random
import sys
from typing import Dict, List, Set

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from planarbook.models import ContactSurgeryRecord, Curve, OpenBook, SurgeryComponent  # noqa: E402
from planarbook.services import (  # noqa: E402
    append_twist,
    contact_surgery_on_page_curve,
    identity_open_book,
    positive_stabilization,
    stabilize_once_for_legendrian,
)

E8_TEXT = """8
-2 1 0 0 0 0 0 0
1 -2 1 0 0 0 0 0
0 1 -2 1 0 0 0 0
0 0 1 -2 1 0 0 0
0 0 0 1 -2 1 0 1
0 0 0 0 1 -2 1 0
0 0 0 0 0 1 -2 0
0 0 0 0 1 0 0 -2
"""


def laminar_family(holes: List[int], rng: random.Random) -> List[Set[int]]:
    """Random nested-or-disjoint family of nonempty hole sets."""

    family: List[Set[int]] = []
    if not holes:
        return family
    if rng.random() < 0.6:
        family.append(set(holes))
    if len(holes) > 1:
        cut = sorted(rng.sample(range(1, len(holes)), rng.randint(1, len(holes) - 1)))
        for start, stop in zip([0] + cut, cut + [len(holes)]):
            family += laminar_family(holes[start:stop], rng)
    return family


def random_laminar_book(rng: random.Random, max_holes: int = 5, max_letters: int = 6) -> OpenBook:
    holes = rng.randint(0, max_holes)
    order = list(range(1, holes + 1))
    rng.shuffle(order)
    family = laminar_family(order, rng)
    ob = identity_open_book(holes)
    if family:
        for _ in range(rng.randint(0, max_letters)):
            ob = append_twist(ob, Curve(enclosed=rng.choice(family)), rng.choice([1, -1]))
    return ob


def laminar_through(ob: OpenBook, rng: random.Random) -> Set[int]:
    """Random stabilization set that keeps the word laminar."""

    through = {hole for hole in ob.page.hole_indices if rng.random() < 0.4}
    curves = {letter.curve.enclosed for letter in ob.word}
    changed = True
    while changed:
        changed = False
        for curve in curves:
            if curve & through and not curve <= through:
                through |= curve
                changed = True
    return through


def random_pipeline_book(rng: random.Random, steps: int = 5) -> OpenBook:
    """S^3 pipeline book built from random stabilizations and Legendrian surgeries."""

    ob, _ = positive_stabilization(identity_open_book(0))
    for _ in range(steps):
        tracked = [curve for curve, _ in ob.legendrian.knots]
        move = rng.randrange(3)
        if move == 0:
            ob, _ = positive_stabilization(ob)
        elif move == 1:
            ob, _ = stabilize_once_for_legendrian(ob, rng.choice(tracked), rng.choice([1, -1]))
        else:
            ob = contact_surgery_on_page_curve(ob, rng.choice(tracked), -1)
    return ob


def random_permutation(ob: OpenBook, rng: random.Random) -> Dict[int, int]:
    holes = list(ob.page.hole_indices)
    shuffled = holes[:]
    rng.shuffle(shuffled)
    return dict(zip(holes, shuffled))


def random_record(rng: random.Random, max_components: int = 3) -> ContactSurgeryRecord:
    size = rng.randint(0, max_components)
    components = tuple(
        SurgeryComponent(tb=rng.randint(-4, 2), rot=rng.randint(-2, 2), coeff=rng.choice([1, -1]))
        for _ in range(size)
    )
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            rows[i][j] = rows[j][i] = rng.randint(-2, 2)
    return ContactSurgeryRecord(components=components, linking=tuple(tuple(r) for r in rows))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)


@pytest.fixture
def e8_text() -> str:
    return E8_TEXT
