from fractions import Fraction

import numpy as np
import pytest

from ddmconvex.classify import is_ddm_convex
from ddmconvex.continuous import (ContinuousFunction, RealBox, continuous_argmin, fractional_restriction,
                                  verify_continuous_proximity, verify_r_ddm)
from ddmconvex.functions import INF, Box, TwoSeparableSpec, UnivariateConvex
from ddmconvex.fuzz import random_dd_quadratic_spec, random_two_separable_spec
from ddmconvex.spec_io import parse_function_spec


def test_quadratic_closed_form_argmin():
    F = ContinuousFunction.quadratic([[2, 0], [0, 2]], [-2, -4])
    x, unique = continuous_argmin(F)
    assert np.allclose(x, [0.5, 1.0]) and unique


def test_singular_and_indefinite_rejected():
    with pytest.raises(ValueError):
        continuous_argmin(ContinuousFunction.quadratic([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        continuous_argmin(ContinuousFunction.quadratic([[1, 0], [0, -1]]))


def test_universe_cuts_off_xbar_uses_solver():
    F = ContinuousFunction.quadratic([[1, 0], [0, 1]], [-10, 0], RealBox((-1, -1), (1, 1)))
    x, unique = continuous_argmin(F)
    assert np.allclose(x, [1, 0], atol=1e-5) and unique


def test_two_separable_solver_argmin():
    spec = TwoSeparableSpec(2, xi={0: UnivariateConvex.abs(1, 1), 1: UnivariateConvex.square(-0.5, 1)},
                            phi={(0, 1): UnivariateConvex.abs(0, 0.25)})
    F = ContinuousFunction.two_separable(spec)
    x, unique = continuous_argmin(F)
    # d/dx1 of (x1 + 1/2)^2 + |1 - x1| / 4 vanishes at x1 = -3/8
    assert abs(x[0] - 1) < 1e-4 and abs(x[1] + 0.375) < 1e-4
    assert not unique


def test_tables_rejected_in_continuous_spec():
    with pytest.raises(ValueError):
        ContinuousFunction.two_separable(TwoSeparableSpec(1, xi={0: UnivariateConvex.table(0, [0, 1])}))


def test_simplex_indicator_exact_membership():
    F = ContinuousFunction.simplex_indicator(3)
    assert F((Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))) == 0
    assert F((0.5, 0.5, 0.1)) == INF
    f2 = fractional_restriction(F, 2, Box.cube(0, 2, 3))
    assert sorted(f2.domain_points()) == sorted([(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2), (1, 0, 1)])


def test_half_simplex_is_not_ddm():
    F = ContinuousFunction.simplex_indicator(3)
    v = verify_r_ddm(F, 3, Box.cube(0, 1, 3))
    assert not v.holds and v.detail["failed_alpha"] == 2
    assert v.witness.extra["alpha"] == 2


def test_fractional_restriction_values():
    F = ContinuousFunction.quadratic([[1]], [0])
    f3 = fractional_restriction(F, 3, Box((-3,), (3,)))
    assert f3((3,)) == pytest.approx(1.0)
    assert f3((1,)) == pytest.approx(1 / 9)
    with pytest.raises(ValueError):
        fractional_restriction(F, 0, Box((0,), (1,)))


@pytest.mark.parametrize("seed", range(8))
def test_dd_quadratic_is_r_ddm(seed):
    rng = np.random.default_rng(seed)
    spec = random_dd_quadratic_spec(rng, n=2)
    spec["continuous"] = True
    F = parse_function_spec(spec)
    v = verify_r_ddm(F, 3, Box.cube(-2, 2, 2))
    assert v.holds and v.detail["evidence_up_to_alpha"] == 3


@pytest.mark.parametrize("seed", range(6))
def test_continuous_proximity_dd_quadratic(seed):
    rng = np.random.default_rng(100 + seed)
    spec = random_dd_quadratic_spec(rng, n=2)
    Q = np.array(spec["Q"])
    target = rng.uniform(-2, 2, size=2)
    F = ContinuousFunction.quadratic(Q, -2 * Q @ target)
    v = verify_continuous_proximity(F, Box.cube(-5, 5, 2))
    assert v.holds and not v.inconclusive
    assert v.detail["max_distance"] <= 2


@pytest.mark.parametrize("seed", range(4))
def test_continuous_proximity_two_separable(seed):
    rng = np.random.default_rng(200 + seed)
    spec = random_two_separable_spec(rng, n=2, side=3, continuous=True)
    F = parse_function_spec(spec)
    F.universe = RealBox((-3, -3), (3, 3))
    v = verify_continuous_proximity(F, Box.cube(-3, 3, 2))
    assert v.holds and not v.inconclusive


def test_proximity_inconclusive_when_box_too_small():
    F = ContinuousFunction.quadratic([[1, 0], [0, 1]], [-8, 0])
    v = verify_continuous_proximity(F, Box.cube(-2, 2, 2))
    assert v.inconclusive and v.holds


def test_real_box():
    b = RealBox((0, None), (1, None))
    assert (0.5, 100) in b and (2, 0) not in b and not b.bounded
    assert is_ddm_convex(fractional_restriction(ContinuousFunction.quadratic([[1]]), 1, Box((-2,), (2,)))).holds
