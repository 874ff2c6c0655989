from __future__ import annotations

import random

import pytest
from pydantic import ValidationError

from planarbook.core.errors import EmptyCurve, HoleOutOfRange
from planarbook.models import Curve
from planarbook.services import (
    curve_class,
    is_laminar_family,
    laminar_pair,
    make_curve,
    make_page,
    relabel_curve,
)


@pytest.mark.parametrize("holes", [0, 1, 4])
def test_make_page(holes):
    page = make_page(holes)
    assert page.hole_indices == tuple(range(1, holes + 1))
    assert page.boundary_components == holes + 1


def test_make_page_rejects_negative_count():
    with pytest.raises(ValueError):
        make_page(-1)


def test_make_curve():
    page = make_page(2)
    assert make_curve(page, {1}).enclosed == frozenset({1})
    assert make_curve(page, [2, 1]) == make_curve(page, {1, 2})
    with pytest.raises(HoleOutOfRange):
        make_curve(page, {3})
    with pytest.raises(EmptyCurve):
        make_curve(page, set())


def test_curve_model_validation():
    with pytest.raises(ValidationError):
        Curve(enclosed=frozenset())
    with pytest.raises(ValidationError):
        Curve(enclosed={0})
    assert str(Curve(enclosed={3, 1})) == "{1,3}"
    assert hash(Curve(enclosed={1, 2})) == hash(Curve(enclosed={2, 1}))


@pytest.mark.parametrize(
    "holes, enclosed, expected",
    [
        (3, {2}, (0, 1, 0)),
        (3, {1, 3}, (1, 0, 1)),
        (1, {1}, (1,)),
    ],
)
def test_curve_class(holes, enclosed, expected):
    page = make_page(holes)
    assert curve_class(page, make_curve(page, enclosed)) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ({1}, {1, 2}, True),
        ({1, 2}, {2, 3}, False),
        ({1}, {2}, True),
    ],
)
def test_laminar_pair(a, b, expected):
    assert laminar_pair(Curve(enclosed=a), Curve(enclosed=b)) is expected


@pytest.mark.parametrize("seed", range(5))
def test_laminar_pair_is_symmetric_and_reflexive(seed):
    rng = random.Random(seed)
    for _ in range(50):
        a = Curve(enclosed=set(rng.sample(range(1, 7), rng.randint(1, 6))))
        b = Curve(enclosed=set(rng.sample(range(1, 7), rng.randint(1, 6))))
        assert laminar_pair(a, a)
        assert laminar_pair(a, b) == laminar_pair(b, a)


def test_curve_class_is_additive_over_disjoint_sets():
    page = make_page(5)
    s, t = make_curve(page, {1, 4}), make_curve(page, {2, 5})
    union = make_curve(page, {1, 2, 4, 5})
    summed = tuple(x + y for x, y in zip(curve_class(page, s), curve_class(page, t)))
    assert summed == curve_class(page, union)


def test_singletons_form_the_standard_basis():
    page = make_page(4)
    singletons = [make_curve(page, {i}) for i in page.hole_indices]
    assert is_laminar_family(singletons)
    classes = [curve_class(page, curve) for curve in singletons]
    assert classes == [tuple(1 if i == j else 0 for j in range(4)) for i in range(4)]


def test_is_laminar_family_detects_interleaving():
    curves = [Curve(enclosed={1, 2}), Curve(enclosed={1}), Curve(enclosed={2, 3})]
    assert not is_laminar_family(curves)
    assert is_laminar_family(curves[:2])


def test_relabel_curve():
    curve = Curve(enclosed={1, 3})
    assert relabel_curve(curve, {1: 2, 2: 1}) == Curve(enclosed={2, 3})
