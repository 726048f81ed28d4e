import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multihilb.catalog import collinear_point_set
from multihilb.exact_linalg import rank
from multihilb.hilbert import (
    DegreeBox,
    collinear_closed_form,
    difference_sequence,
    evaluation_matrix,
    hilbert_table,
    hilbert_value,
    monomial_exponents,
    ring_dimension,
    stabilization_corner,
)
from multihilb.points import Point, PointSet, ProjCoordinate, apply_coordinate_change, permute_axes
from conftest import random_config
from oracles import naive_hilbert

seeds = st.integers(0, 10**6)


@pytest.mark.parametrize("d, n", [((0, 0, 0), 1), ((2, 2, 1), 18), ((1, 2, 2), 18), ((3, 0), 4)])
def test_ring_dimension(d, n):
    assert ring_dimension(d) == n


def test_monomial_exponents():
    assert monomial_exponents((1, 0, 0)) == [(0, 0, 0), (1, 0, 0)]
    assert len(monomial_exponents((2, 2, 2))) == 27
    assert monomial_exponents((1, 1, 0)) == [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]


class TestEvaluationMatrix:
    def test_point_at_origin_like(self):
        x = PointSet.of([Point(tuple(ProjCoordinate(1, 0) for _ in range(3)))])
        m = evaluation_matrix(x, (1, 1, 1))
        assert (m.rows, m.cols) == (1, 8)
        assert sum(1 for v in m.entries if v != 0) == 1

    def test_two_points_at_corner(self):
        x = PointSet.of([Point.affine(0, 0, 0), Point.affine(1, 2, 0)])
        corner = stabilization_corner(x)
        assert corner == (1, 1, 0)
        assert rank(evaluation_matrix(x, corner)) == 2

    def test_example_33(self, ex33):
        m = evaluation_matrix(ex33, (2, 2, 1))
        assert (m.rows, m.cols) == (11, 18)
        assert rank(m) == 9

    def test_entries(self):
        x = PointSet.of([Point((ProjCoordinate(2, 3), ProjCoordinate(0, 1)))])
        # [2:3] canonicalizes to [1:3/2]; monomials u^e v^(2-e) for e = 0, 1, 2
        m = evaluation_matrix(x, (2, 1))
        assert [str(v) for v in m.entries] == ["9/4", "0", "3/2", "0", "1", "0"]


class TestHilbertValue:
    def test_example_33(self, ex33):
        assert [hilbert_value(ex33, (2, 2, k)) for k in range(3)] == [6, 9, 11]

    def test_example_35(self, ex35):
        assert [hilbert_value(ex35, (1, 2, k)) for k in range(3)] == [6, 10, 10]

    @given(st.integers(2, 4), seeds, st.lists(st.integers(0, 4), min_size=4, max_size=4))
    @settings(max_examples=30, deadline=None)
    def test_single_point(self, arity, seed, degree):
        x = random_config(arity, seed, sizes=(1, 1))
        assert hilbert_value(x, degree[:arity]) == 1

    def test_negative_degree_is_zero(self, ex33):
        assert hilbert_value(ex33, (2, -1, 3)) == 0

    def test_empty(self):
        assert hilbert_value(PointSet((), 3), (2, 2, 2)) == 0

    def test_arity_mismatch(self, ex33):
        with pytest.raises(ValueError):
            hilbert_value(ex33, (1, 1))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 4), seeds, st.data())
    def test_matches_definition(self, arity, seed, data):
        # fast path (integer Bareiss or Gram matrix) against Fraction Gauss-Jordan
        x = random_config(arity, seed, sizes=(1, 8), allow_infinity=True)
        d = tuple(data.draw(st.integers(0, 3)) for _ in range(arity))
        expected = naive_hilbert(x.points, d)
        assert hilbert_value(x, d) == expected
        assert rank(evaluation_matrix(x, d)) == expected


class TestTable:
    def test_example_33_first_layer(self, ex33):
        t = hilbert_table(ex33, (3, 3, 2))
        assert t.values[:, :, 0].tolist() == [[1, 2, 3, 3], [2, 4, 5, 5], [3, 5, 6, 6], [3, 5, 6, 6]]
        assert t.projection_counts == (3, 3, 3) and t.point_count == 11
        assert t.corner == (2, 2, 2)
        assert t.extended((7, 9, 12)) == 11

    def test_empty(self):
        t = hilbert_table(PointSet((), 3), DegreeBox((2, 1, 2)))
        assert not t.values.any()
        assert t.corner is None

    def test_example_35(self, ex35):
        t = hilbert_table(ex35, (1, 2, 3))
        assert [t[1, 2, k] for k in range(4)] == [6, 10, 10, 10]

    def test_extended_needs_box(self, ex33):
        t = hilbert_table(ex33, (1, 1, 1))
        with pytest.raises(KeyError):
            t.extended((2, 2, 2))


class TestCorner:
    def test_examples(self, ex33, ex35):
        assert stabilization_corner(ex33) == (2, 2, 2)
        assert stabilization_corner(ex35) == (1, 2, 2)

    def test_single_point(self):
        assert stabilization_corner(PointSet.of([Point.affine(1, 2, 3, 4)])) == (0, 0, 0, 0)

    def test_empty(self):
        with pytest.raises(ValueError):
            stabilization_corner(PointSet((), 3))


class TestDifferenceSequence:
    def test_example_33(self, ex33):
        d = difference_sequence(ex33, (2, 2), 2)
        assert d.values[:4] == (6, 3, 2, 0)
        assert set(d.values[3:]) == {0} and len(d.values) == 12
        assert d.degree(1) == (2, 2, 1)

    def test_collinear(self):
        x = collinear_point_set(3, 4)
        expected = [collinear_closed_form(4, k) - collinear_closed_form(4, k - 1) for k in range(7)]
        assert expected == [1, 1, 1, 1, 0, 0, 0]
        assert list(difference_sequence(x, (0, 0), 2, 6).values) == expected

    def test_single_point(self):
        x = PointSet.of([Point.affine(0, 0, 0)])
        assert difference_sequence(x, (0, 0), 2, 3).values == (1, 0, 0, 0)

    def test_free_axis_in_middle(self, ex35):
        d = difference_sequence(ex35, (1, 2), 1, 3)
        assert d.degree(0) == (1, 0, 2)
        assert d.values[0] == hilbert_value(ex35, (1, 0, 2))


def test_collinear_closed_form():
    assert collinear_closed_form(5, 2) == 3
    assert collinear_closed_form(5, 10) == 5
    assert {collinear_closed_form(1, k) for k in range(6)} == {1}
    with pytest.raises(ValueError):
        collinear_closed_form(0, 1)


# -- properties -------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), seeds)
def test_bounds_and_monotonicity(arity, seed):
    x = random_config(arity, seed, sizes=(1, 9))
    box = tuple([3] * arity) if arity < 4 else (2, 2, 2, 2)
    t = hilbert_table(x, box).values
    for d in itertools.product(*(range(n) for n in t.shape)):
        assert 0 <= t[d] <= min(len(x), ring_dimension(d))
    for axis in range(arity):
        assert (np.diff(t, axis=axis) >= 0).all()


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), seeds)
def test_stabilizes_beyond_corner(arity, seed):
    x = random_config(arity, seed)
    corner = stabilization_corner(x)
    assert hilbert_value(x, corner) == len(x)
    for free in range(arity):
        for k in range(len(x) + 1):
            base = list(corner)
            base[free] = k
            ref = hilbert_value(x, base)
            for off in (1, 2, 3):
                shifted = [c + (off if a != free else 0) for a, c in enumerate(base)]
                assert hilbert_value(x, shifted) == ref


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), seeds)
def test_axis_slice_is_points_on_p1(arity, seed):
    x = random_config(arity, seed)
    corner = stabilization_corner(x)
    for a in range(arity):
        for i in range(corner[a] + 4):
            d = [0] * arity
            d[a] = i
            assert hilbert_value(x, d) == min(i + 1, corner[a] + 1)


@pytest.mark.parametrize("arity", [2, 3, 4])
@pytest.mark.parametrize("s", [1, 2, 5])
def test_collinear_matches_closed_form(arity, s):
    for free in range(arity):
        x = collinear_point_set(arity, s, free)
        for d in itertools.product(*(range(3) if a != free else range(s + 3) for a in range(arity))):
            assert hilbert_value(x, d) == collinear_closed_form(s, d[free])


invertible = st.tuples(*[st.integers(-3, 3)] * 4).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3), seeds, invertible, st.data())
def test_projective_invariance(arity, seed, m, data):
    x = random_config(arity, seed, sizes=(1, 9), allow_infinity=True)
    axis = data.draw(st.integers(0, arity - 1))
    y = apply_coordinate_change(x, axis, [[m[0], m[1]], [m[2], m[3]]])
    box = (3,) * arity
    assert (hilbert_table(x, box).values == hilbert_table(y, box).values).all()


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), seeds, st.randoms(use_true_random=False))
def test_axis_equivariance(arity, seed, rnd):
    x = random_config(arity, seed, sizes=(1, 9))
    order = list(range(arity))
    rnd.shuffle(order)
    y = permute_axes(x, order)
    box = tuple(2 + (a % 2) for a in range(arity))
    tx = hilbert_table(x, box).values
    ty = hilbert_table(y, tuple(box[a] for a in order)).values
    assert (np.transpose(tx, order) == ty).all()
