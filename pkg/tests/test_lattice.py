import numpy as np
import pytest
from hypothesis import given, strategies as st

from ddmconvex.errors import DimensionMismatchError, EmptyDecompositionError
from ddmconvex.lattice import (as_point, chebyshev_distance, directed_midpoint_pair, is_midpoint_pair,
                               level_set_decomposition, level_set_directions, midpoint_decompose, mu,
                               mu_arrays, rounded_midpoint_arrays, rounded_midpoint_pair, sign_flip)

from oracles import level_dirs_ref, mu_ref

coord = st.integers(-50, 50)


def points(n):
    return st.lists(coord, min_size=n, max_size=n).map(tuple)


@st.composite
def point_pair(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    return draw(points(n)), draw(points(n))


# --- worked examples -------------------------------------------------------

def test_mu_on_dmc_example():
    assert directed_midpoint_pair((0, 0, 0), (2, 1, -1)) == ((1, 0, 0), (1, 1, -1))


def test_mu_equal_points():
    assert directed_midpoint_pair((3, -2), (3, -2)) == ((3, -2), (3, -2))


def test_mu_unit_distance_is_identity():
    assert directed_midpoint_pair((1, 0), (0, 1)) == ((1, 0), (0, 1))


@pytest.mark.parametrize("x, y, expected", [
    ((1, 0), (0, 1), ((1, 1), (0, 0))),
    ((2, 2), (0, 0), ((1, 1), (1, 1))),
    ((0, 0, 0), (2, 1, -1), ((1, 1, 0), (1, 0, -1))),
])
def test_rounded_midpoints(x, y, expected):
    assert rounded_midpoint_pair(x, y) == expected


def test_level_sets_example():
    ls = level_set_decomposition((0, 0, 0), (2, 1, -1))
    assert len(ls) == 2
    assert (ls[0].A, ls[0].B) == ({0, 1}, {2})
    assert (ls[1].A, ls[1].B) == ({0}, frozenset())


def test_level_sets_single_coordinate():
    ls = level_set_decomposition((0,), (3,))
    assert [(l.A, l.B) for l in ls] == [({0}, frozenset())] * 3


def test_level_sets_unit():
    ls = level_set_decomposition((5, 5), (4, 6))
    assert len(ls) == 1 and ls[0].A == {1} and ls[0].B == {0}


def test_level_sets_reject_equal_points():
    with pytest.raises(EmptyDecompositionError):
        level_set_decomposition((1, 2), (1, 2))


@pytest.mark.parametrize("x, expected", [
    ((2, 1, -1), ((1, 0, 0), (1, 1, -1))),
    ((0, 0), ()),
    ((3,), ((1,), (1,), (1,))),
])
def test_midpoint_decompose_examples(x, expected):
    assert midpoint_decompose(x) == tuple(sorted(expected))


@pytest.mark.parametrize("x, y, d", [(((0, 0, 0)), (2, 1, -1), 2), ((4, 4), (4, 4), 0), ((-3,), (4,), 7)])
def test_chebyshev(x, y, d):
    assert chebyshev_distance(x, y) == d


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        mu((1, 2), (1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        chebyshev_distance((1,), (1, 2))


def test_as_point_rejects_fractional_and_empty():
    with pytest.raises(ValueError):
        as_point([1.5])
    with pytest.raises(ValueError):
        as_point([])
    assert as_point(np.array([2, -3])) == (2, -3)


def test_huge_coordinates_are_exact():
    big = 10 ** 30 + 1
    assert directed_midpoint_pair((big,), (-big - 1,)) == ((0,), (-1,))
    assert directed_midpoint_pair((-big - 1,), (big,)) == ((-1,), (0,))


# --- properties ------------------------------------------------------------

@given(point_pair())
def test_mu_matches_reference(xy):
    x, y = xy
    assert mu(x, y) == mu_ref(x, y)
    assert mu(y, x) == mu_ref(y, x)


@given(point_pair())
def test_midpoint_characterization(xy):
    x, y = xy
    p, q = directed_midpoint_pair(x, y)
    assert tuple(a + b for a, b in zip(p, q)) == tuple(a + b for a, b in zip(x, y))
    assert chebyshev_distance(p, q) <= 1
    assert is_midpoint_pair(x, y, p, q)


@given(point_pair())
def test_characterization_is_unique(xy):
    """Any other split of x + y into a close pair fails the sign condition."""
    x, y = xy
    p, q = directed_midpoint_pair(x, y)
    for i in range(len(x)):
        if p[i] != q[i]:
            p2 = list(p)
            q2 = list(q)
            p2[i], q2[i] = q[i], p[i]
            assert not is_midpoint_pair(x, y, tuple(p2), tuple(q2))


@given(point_pair(), st.data())
def test_translation_equivariance(xy, data):
    x, y = xy
    d = data.draw(points(len(x)))
    shift = lambda v: tuple(a + b for a, b in zip(v, d))
    assert mu(shift(x), shift(y)) == shift(mu(x, y))


@given(point_pair(), st.randoms(use_true_random=False))
def test_permutation_and_sign_equivariance(xy, rnd):
    x, y = xy
    n = len(x)
    sigma = list(range(n))
    rnd.shuffle(sigma)
    perm = lambda v: tuple(v[s] for s in sigma)
    assert mu(perm(x), perm(y)) == perm(mu(x, y))
    tau = tuple(rnd.choice((1, -1)) for _ in range(n))
    assert mu(sign_flip(tau, x), sign_flip(tau, y)) == sign_flip(tau, mu(x, y))


@given(point_pair())
def test_mu_equals_rounding_on_ordered_pairs(xy):
    x, y = xy
    hi = tuple(map(max, x, y))
    lo = tuple(map(min, x, y))
    assert directed_midpoint_pair(hi, lo) == rounded_midpoint_pair(hi, lo)


@given(point_pair())
def test_level_sets_reconstruct(xy):
    x, y = xy
    if x == y:
        return
    ls = level_set_decomposition(x, y)
    n = len(x)
    total = [0] * n
    for prev, cur in zip(ls, ls[1:]):
        assert cur.A <= prev.A and cur.B <= prev.B
    for l in ls:
        assert not (l.A & l.B)
        for i, v in enumerate(l.direction(n)):
            total[i] += v
    assert ls[-1].A | ls[-1].B
    assert tuple(total) == tuple(b - a for a, b in zip(x, y))
    assert list(level_set_directions(x, y)) == sorted(level_dirs_ref(x, y))


@given(st.integers(1, 4).flatmap(lambda n: points(n)))
def test_decompose_equals_level_sets(x):
    D = midpoint_decompose(x)
    assert all(any(d) and set(d) <= {-1, 0, 1} for d in D)
    assert tuple(map(sum, zip(*D))) == x if D else not any(x)
    assert D == level_set_directions((0,) * len(x), x)


def test_vectorized_midpoints_agree():
    rng = np.random.default_rng(0)
    X = rng.integers(-9, 10, size=(500, 3))
    Y = rng.integers(-9, 10, size=(500, 3))
    A, B = mu_arrays(X, Y)
    C, D = rounded_midpoint_arrays(X, Y)
    for x, y, a, b, c, d in zip(X, Y, A, B, C, D):
        x, y = tuple(map(int, x)), tuple(map(int, y))
        assert (tuple(a), tuple(b)) == directed_midpoint_pair(x, y)
        assert (tuple(c), tuple(d)) == rounded_midpoint_pair(x, y)

