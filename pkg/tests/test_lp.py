from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from ddmconvex.lp import simplex_eq


def test_small_optimum_is_exact():
    # min x + 2y  s.t.  x + y = 1,  x - y = 1/3
    res = simplex_eq([1, 2], [[1, 1], [1, -1]], [1, Fraction(1, 3)])
    assert res.status == "optimal"
    assert res.x == [Fraction(2, 3), Fraction(1, 3)]
    assert res.value == Fraction(4, 3)


def test_infeasible_and_unbounded():
    assert simplex_eq([1], [[1]], [-1]).status == "infeasible"
    assert simplex_eq([-1, 0], [[1, -1]], [0]).status == "unbounded"


def test_redundant_rows():
    res = simplex_eq([1, 1, 0], [[1, 1, 1], [2, 2, 2]], [1, 2])
    assert res.status == "optimal" and res.value == 0


def test_degenerate_program_terminates():
    A = [[1, 1, 1, 0], [1, -1, 0, 1]]
    res = simplex_eq([-1, -1, 0, 0], A, [0, 0])
    assert res.status == "optimal" and res.value == 0


@pytest.mark.parametrize("seed", range(40))
def test_matches_highs_on_random_envelope_programs(seed):
    """Random convex-combination programs shaped like the local envelope LP."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 4))
    cols = int(rng.integers(n + 1, 2 ** n + 2))
    W = rng.integers(0, 2, size=(n, cols))
    lam = rng.dirichlet(np.ones(cols))
    z = [Fraction(int(round(v * 8)), 8) for v in W @ lam]
    A = [list(map(int, row)) for row in W] + [[1] * cols]
    b = z + [1]
    c = [int(v) for v in rng.integers(-5, 6, size=cols)]
    ours = simplex_eq(c, A, b)
    ref = linprog(c, A_eq=np.array(A, float), b_eq=np.array([float(v) for v in b]), bounds=(0, None),
                  method="highs")
    if ref.status == 2:
        assert ours.status == "infeasible"
        return
    assert ref.status == 0 and ours.status == "optimal"
    assert abs(float(ours.value) - ref.fun) <= 1e-7
    x = ours.x
    assert all(v >= 0 for v in x)
    for row, rhs in zip(A, b):
        assert sum(a * v for a, v in zip(row, x)) == rhs
