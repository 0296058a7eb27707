"""Worked counterexamples and examples from the DDM-convexity literature.

Each fixture states an expected verdict and, where one is known, the
expected witness; :func:`run_gallery` executes them all.
"""
from __future__ import annotations

import itertools
from typing import Callable, List

from .classify import is_ddm_convex, is_ddm_set, is_globally_dmc, is_integrally_convex, is_lnat_convex
from .continuous import ContinuousFunction, fractional_restriction
from .functions import Box, QuadraticSpec, indicator, infconv, quadratic_function, quadratic_is_diag_dominant, table_function
from .lattice import directed_midpoint_pair

S_PAIR = [(1, 0), (0, 1)]
DMC_NOT_DDM = [(0, 0, 0), (1, 1, 0), (1, 0, -1), (2, 1, -1)]
DDM_NOT_DMC = [(0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 1, 1), (1, 1, -1), (2, 1, -1), (1, 1, 0), (2, 1, 0)]
LNAT2_SET = [(0, 0, 0, 0), (0, 1, 1, 0), (1, 1, 0, 0), (1, 2, 1, 0)]
MINKOWSKI_PARTS = ([(0, 0, 0), (1, 1, 0)], [(0, 0, 0), (0, 1, 1)])
MINKOWSKI_SUM = [(0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1)]
TILT_TABLE = {(0, 0, 0): 0, (1, 0, 1): 1, (1, 1, 0): 1, (1, 0, 0): 2, (1, 1, 1): 2, (2, 1, 1): 3}
NON_DD_Q = [[5, 2], [2, 1]]
HALF_SIMPLEX = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1), (0, 0, 2), (1, 0, 1)]


def tilt_function():
    return table_function(TILT_TABLE, Box((0, 0, 0), (2, 1, 1)))


def _w(v):
    return None if v.witness is None else (list(v.witness.x), list(v.witness.y))


def _fixture(name, claim):
    def deco(fn):
        fn.fixture_name = name
        fn.claim = claim
        return fn
    return deco


@_fixture("pair-set", "{(1,0),(0,1)} is DDM-convex but not L-natural convex")
def _pair_set():
    f = indicator(S_PAIR)
    d, l = is_ddm_convex(f), is_lnat_convex(f)
    return d.holds and not l.holds, {"DDM": d.holds, "Lnat": l.holds, "Lnat_witness": _w(l)}


@_fixture("dmc-not-ddm", "the four-point set is globally discrete midpoint convex but not DDM-convex, "
                         "witness ((0,0,0),(2,1,-1))")
def _dmc_not_ddm():
    f = indicator(DMC_NOT_DDM)
    g, d = is_globally_dmc(f), is_ddm_convex(f)
    ok = g.holds and not d.holds and _w(d) == ([0, 0, 0], [2, 1, -1])
    ok = ok and d.witness.extra["p"] == (1, 0, 0) and d.witness.extra["q"] == (1, 1, -1)
    return ok, {"globalDMC": g.holds, "DDM": d.holds, "DDM_witness": _w(d)}


@_fixture("ddm-not-dmc", "the eight-point set T is DDM-convex but not globally discrete midpoint convex")
def _ddm_not_dmc():
    f = indicator(DDM_NOT_DMC)
    d, g = is_ddm_convex(f), is_globally_dmc(f)
    return d.holds and not g.holds, {"DDM": d.holds, "globalDMC": g.holds, "globalDMC_witness": _w(g)}


@_fixture("sign-flips", "every sign flip of T stays DDM-convex and fails global discrete midpoint convexity")
def _sign_flips():
    obs = {}
    ok = True
    for tau in itertools.product((1, -1), repeat=3):
        pts = [tuple(t * a for t, a in zip(tau, p)) for p in DDM_NOT_DMC]
        f = indicator(pts)
        d, g = is_ddm_convex(f), is_globally_dmc(f)
        obs[str(tau)] = {"DDM": d.holds, "globalDMC": g.holds}
        ok &= d.holds and not g.holds
    return ok, obs


@_fixture("tilt-table", "the six-point table is not DDM-convex: f(0,0,0)+f(2,1,1) = 3 < 4, "
                        "while its domain is an L-natural convex set")
def _tilt():
    f = tilt_function()
    d = is_ddm_convex(f)
    dom = is_lnat_convex(indicator(TILT_TABLE))
    ok = (not d.holds and _w(d) == ([0, 0, 0], [2, 1, 1]) and d.witness.extra["lhs"] == 3
          and d.witness.extra["rhs"] == 4 and dom.holds)
    return ok, {"DDM": d.holds, "witness": _w(d), "lhs": d.witness.extra["lhs"],
                "rhs": d.witness.extra["rhs"], "dom_Lnat": dom.holds}


@_fixture("lnat2-set", "the Minkowski sum of two L-natural sets in Z^4 is not DDM-convex, "
                       "witness ((0,0,0,0),(1,2,1,0)), yet it is integrally convex")
def _lnat2():
    f = indicator(LNAT2_SET)
    d, ic = is_ddm_convex(f), is_integrally_convex(f)
    ok = not d.holds and _w(d) == ([0, 0, 0, 0], [1, 2, 1, 0]) and ic.holds
    return ok, {"DDM": d.holds, "witness": _w(d), "integrallyConvex": ic.holds}


@_fixture("minkowski", "two DDM-convex sets whose Minkowski sum is not DDM-convex, "
                       "witness ((0,0,0),(1,2,1)) with mu = (0,1,0)")
def _minkowski():
    s1, s2 = (indicator(S) for S in MINKOWSKI_PARTS)
    conv = infconv(s1, s2)
    dom = sorted(conv.domain_points())
    d = is_ddm_convex(conv)
    st = is_ddm_set(MINKOWSKI_SUM)
    ok = (is_ddm_convex(s1).holds and is_ddm_convex(s2).holds and dom == MINKOWSKI_SUM and not d.holds
          and _w(d) == ([0, 0, 0], [1, 2, 1]) and d.witness.extra["p"] == (0, 1, 0) and not st.holds)
    return ok, {"sum": [list(p) for p in dom], "DDM": d.holds, "witness": _w(d)}


@_fixture("pd-quadratic", "x^T [[5,2],[2,1]] x is convex, but its integer restriction on [-2,2]^2 is not DDM-convex")
def _pd_quadratic():
    q = QuadraticSpec(NON_DD_Q)
    d = is_ddm_convex(quadratic_function(q, Box.cube(-2, 2, 2)))
    dd = quadratic_is_diag_dominant(q)
    return (not d.holds) and (not dd.holds), {"DDM": d.holds, "diag_dominant": dd.holds, "witness": _w(d)}


@_fixture("half-simplex", "restricting the simplex indicator at scale 1/2 gives the six-point T, "
                          "which is not DDM-convex; at x=(2,0,0), y=(0,1,1), mu(x,y)=(1,0,0) is outside T")
def _half_simplex():
    F = ContinuousFunction.simplex_indicator(3)
    f2 = fractional_restriction(F, 2, Box.cube(0, 2, 3))
    dom = sorted(f2.domain_points())
    d = is_ddm_convex(f2)
    p, q = directed_midpoint_pair((2, 0, 0), (0, 1, 1))
    at_pair = f2((2, 0, 0)) + f2((0, 1, 1)) < f2(p) + f2(q)
    f1 = fractional_restriction(F, 1, Box.cube(0, 1, 3))
    ok = (dom == sorted(HALF_SIMPLEX) and not d.holds and p == (1, 0, 0) and at_pair
          and is_ddm_convex(f1).holds)
    return ok, {"T": [list(t) for t in dom], "DDM": d.holds, "first_witness": _w(d),
                "stated_pair_violates": at_pair, "mu": list(p)}


@_fixture("cube-subsets", "every subset of {0,1}^2 is a DDM-convex set")
def _cube_subsets():
    cube = list(itertools.product((0, 1), repeat=2))
    ok = all(is_ddm_set(S).holds for r in range(1, 5) for S in itertools.combinations(cube, r))
    return ok, {"subsets": 15}


@_fixture("ddm-implies-ic", "the DDM-convex sets above are integrally convex")
def _ddm_ic():
    res = {name: is_integrally_convex(indicator(S)).holds
           for name, S in (("pair", S_PAIR), ("T", DDM_NOT_DMC))}
    return all(res.values()), res


FIXTURES: List[Callable] = [_pair_set, _dmc_not_ddm, _ddm_not_dmc, _sign_flips, _tilt, _lnat2, _minkowski,
                            _pd_quadratic, _half_simplex, _cube_subsets, _ddm_ic]


def run_gallery():
    """Run every fixture; returns ``(all_passed, report)``."""
    rows = []
    for fx in FIXTURES:
        ok, observed = fx()
        rows.append({"fixture": fx.fixture_name, "claim": fx.claim, "pass": bool(ok), "observed": observed})
    return all(r["pass"] for r in rows), {"fixtures": rows, "passed": sum(r["pass"] for r in rows),
                                          "total": len(rows)}
