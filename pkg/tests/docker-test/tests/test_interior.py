# tests/test_interior.py
"""
Tests for interior points of solids, including a brute-force grid oracle for
the exact one-dimensional test.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mereo_geometry.errors import DimensionMismatch, DimensionRequired1
from mereo_geometry.geometry.balls import Ball, Solid, TriBool, part_of
from mereo_geometry.geometry.interior import (
    interior_point, interior_point_1d_exact, interior_subset_1d, interior_witness,
    merged_intervals,
)
from mereo_geometry.geometry.transforms import (
    Permutation, Scaling, SignFlip, Translation, transform_point, transform_solid,
)


def interval(low, high):
    low, high = Fraction(low), Fraction(high)
    return Ball(((low + high) / 2,), (high - low) / 2)


def test_single_disk():
    disk = Solid((Ball((0, 0), 1),))
    assert interior_point((0, 0), disk) is TriBool.YES
    assert interior_point((2, 2), disk) is TriBool.NO
    assert interior_point((1, 0), disk) is TriBool.UNDECIDED


def test_tangency_point_of_two_disks_is_undecided():
    solid = Solid((Ball((0, 0), 1), Ball((2, 0), 1)))
    assert interior_point((1, 0), solid) is TriBool.UNDECIDED


def test_dimension_checks():
    disk = Solid((Ball((0, 0), 1),))
    with pytest.raises(DimensionMismatch):
        interior_point((0,), disk)
    with pytest.raises(DimensionRequired1):
        interior_point_1d_exact((0, 0), disk)
    with pytest.raises(DimensionRequired1):
        merged_intervals(disk)


def test_exact_1d_examples():
    touching = Solid((interval(0, 1), interval(1, 2)))
    apart = Solid((interval(0, 1), interval(2, 3)))
    assert interior_point_1d_exact((1,), touching)
    assert not interior_point_1d_exact((1,), apart)
    assert interior_point_1d_exact((Fraction(1, 2),), Solid((interval(0, 1),)))
    assert not interior_point_1d_exact((0,), Solid((interval(0, 1),)))


def test_merged_intervals():
    solid = Solid((interval(2, 3), interval(0, 1), interval(1, 2), interval(5, 6)))
    assert merged_intervals(solid) == [(0, 3), (5, 6)]


def test_interior_subset():
    union = Solid((interval(0, 1), interval(1, 2)))
    assert interior_subset_1d(Solid((interval(0, 2),)), union)
    assert not interior_subset_1d(Solid((interval(0, 1), interval(2, 3))), union)
    assert interior_subset_1d(Solid((interval(Fraction(1, 2), Fraction(3, 2)),)), union)


def test_witness_sits_inside_a_constituent():
    solid = Solid((Ball((0, 0), 2, label="A"), Ball((5, 0), 1, label="C")))
    witness, host = interior_witness((Fraction(1, 2), 0), solid)
    assert host.label == "A"
    assert witness.center == (Fraction(1, 2), 0)
    assert witness.radius == 1
    assert part_of(witness, host)
    assert interior_witness((3, 0), solid) is None


# Grid oracle: endpoints and points are multiples of 1/4, so checking 1/8 on
# either side of a covered point decides whether it is interior to the union.

STEP = Fraction(1, 4)
quarter = st.integers(min_value=0, max_value=24).map(lambda n: n * STEP)


@st.composite
def interval_solids(draw):
    spans = draw(st.lists(st.tuples(quarter, st.integers(min_value=1, max_value=8)),
                          min_size=1, max_size=4))
    return Solid(tuple(interval(low, low + width * STEP) for low, width in spans))


def _covered(x, solid):
    return any(abs(x - b.center[0]) <= b.radius for b in solid.parts)


def _grid_interior(x, solid):
    half = STEP / 2
    return _covered(x, solid) and _covered(x - half, solid) and _covered(x + half, solid)


@given(interval_solids(), quarter)
@settings(max_examples=200)
def test_exact_1d_matches_grid_oracle(solid, x):
    assert interior_point_1d_exact((x,), solid) == _grid_interior(x, solid)


@given(interval_solids(), quarter)
@settings(max_examples=200)
def test_three_valued_answer_is_sound_in_1d(solid, x):
    exact = interior_point_1d_exact((x,), solid)
    answer = interior_point((x,), solid)
    if answer is TriBool.YES:
        assert exact
        witness, host = interior_witness((x,), solid)
        assert part_of(witness, host)
    if answer is TriBool.NO:
        assert not exact
        assert all(abs(x - b.center[0]) > b.radius for b in solid.parts)
    if not exact:
        assert answer is not TriBool.YES


# Interior answers do not depend on coordinates

halves = st.integers(min_value=-4, max_value=4).map(lambda n: Fraction(n, 2))


def solids_in(dim):
    balls = st.builds(Ball, st.tuples(*[halves] * dim),
                      st.integers(min_value=1, max_value=6).map(lambda n: Fraction(n, 2)))
    return st.lists(balls, min_size=1, max_size=3).map(lambda parts: Solid(tuple(parts)))


def transforms_in(dim):
    return st.one_of(
        st.builds(Translation, st.tuples(*[halves] * dim)),
        st.permutations(range(dim)).map(lambda order: Permutation(tuple(order))),
        st.integers(min_value=0, max_value=dim - 1).map(SignFlip),
        st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=8).map(Scaling),
    )


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_interior_point_invariant_under_transforms(dim):

    @given(solids_in(dim), st.tuples(*[halves] * dim), transforms_in(dim))
    @settings(max_examples=300)
    def check(solid, point, t):
        moved = transform_solid(solid, t)
        assert interior_point(point, solid) is interior_point(transform_point(point, t), moved)

    check()


@given(interval_solids(), interval_solids(), quarter, transforms_in(1))
@settings(max_examples=300)
def test_exact_1d_invariant_under_transforms(inner, outer, x, t):
    moved_inner, moved_outer = transform_solid(inner, t), transform_solid(outer, t)
    moved_x = transform_point((x,), t)
    assert interior_point_1d_exact((x,), outer) == interior_point_1d_exact(moved_x, moved_outer)
    assert interior_subset_1d(inner, outer) == interior_subset_1d(moved_inner, moved_outer)


def test_sign_flip_mirrors_merged_intervals():
    solid = Solid((interval(0, 1), interval(1, 2), interval(5, 6)))
    flipped = transform_solid(solid, SignFlip(0))
    assert merged_intervals(flipped) == [(-6, -5), (-2, 0)]
    assert interior_point_1d_exact((-1,), flipped)
    assert not interior_point_1d_exact((-5,), flipped)
