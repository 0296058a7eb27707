"""Local search and scaling minimization for DDM-convex functions.

The only primitive is the 1-neighbourhood oracle: return a point of
``N1(x) = {y : ||y - x||_inf <= 1}`` with least value.  Steepest descent
repeats it until the value stops decreasing; for a DDM-convex function
this happens after exactly ``L + 1`` calls, ``L`` being the l-inf distance
from the start to the nearest minimizer.  The scaling variant runs descent
on ``f(x + alpha y)`` for halving ``alpha``, each phase confined to the ball
``||y||_inf <= n``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .classify import DEFAULT_TOL, Verdict, Witness, max_pairs
from .errors import DescentError, ResourceLimitError
from .functions import INF, Box, LatticeFunction
from .lattice import Point, as_point, chebyshev_distance


class _Counted:
    """Wrap an oracle and count raw evaluations."""

    def __init__(self, fn: Callable[[Point], object]):
        self.fn = fn
        self.evals = 0

    def __call__(self, x):
        self.evals += 1
        return self.fn(x)


def _directions(n: int):
    return list(itertools.product((-1, 0, 1), repeat=n))


def _neighbourhood_argmin(g, x: Point, fx, feasible=None):
    """Best point of N1(x) under ``g``; ``x`` wins ties, then lexicographic order."""
    best, best_val = x, fx
    for d in _directions(len(x)):
        y = tuple(a + b for a, b in zip(x, d))
        if y == x or (feasible is not None and not feasible(y)):
            continue
        v = g(y)
        if v < best_val:
            best, best_val = y, v
    return best, best_val


def one_neighborhood_argmin(f: LatticeFunction, x: Sequence[int],
                            feasible: Optional[Callable[[Point], bool]] = None) -> Point:
    """Minimize ``f`` over the 3^n points at l-inf distance at most one from ``x``.

    The centre wins ties; among strictly better neighbours the first in
    lexicographic order wins.  ``feasible`` optionally restricts the
    neighbours considered.
    """
    x = as_point(x)
    fx = f(x)
    if fx == INF:
        raise ValueError(f"{x} is not in dom f")
    return _neighbourhood_argmin(f, x, fx, feasible)[0]


@dataclass
class DescentTrace:
    path: List[Point]
    values: List[object]
    iterations: int
    oracle_evals: int
    minimizer: Point
    L_star: Optional[int] = None

    def to_dict(self) -> dict:
        return {"path": [list(p) for p in self.path],
                "values": [_num(v) for v in self.values],
                "iterations": self.iterations, "oracle_evals": self.oracle_evals,
                "minimizer": list(self.minimizer), "L_star": self.L_star}


def _num(v):
    if v == INF:
        return "inf"
    return v if isinstance(v, (int, float)) else float(v)


def _descend(g: _Counted, y0: Point, cap: int, feasible=None):
    y = y0
    fy = g(y)
    path, values, calls = [y], [fy], 0
    while True:
        if calls >= cap:
            raise DescentError(f"descent did not stop within {cap} neighbourhood calls; "
                               "the function is probably not DDM-convex or is unbounded below")
        calls += 1
        z, fz = _neighbourhood_argmin(g, y, fy, feasible)
        if z == y:
            return path, values, calls
        y, fy = z, fz
        path.append(y)
        values.append(fy)


def steepest_descent(f: LatticeFunction, x0: Sequence[int], cap: Optional[int] = None,
                     with_L: bool = False) -> DescentTrace:
    """1-neighbourhood steepest descent from ``x0``.

    Parameters
    ----------
    f : LatticeFunction
        Oracle; ``x0`` must be in its effective domain.
    x0 : sequence of int
        Starting point.
    cap : int, optional
        Maximum number of neighbourhood calls.  Defaults to the universe's
        l-inf diameter plus two; exceeding it raises :class:`DescentError`.
    with_L : bool
        Also brute-force ``L``, the distance from ``x0`` to the nearest
        minimizer over the universe.

    Returns
    -------
    DescentTrace
        ``iterations`` counts neighbourhood calls including the final one
        that confirms the stop.
    """
    x0 = as_point(x0)
    if f(x0) == INF:
        raise ValueError(f"starting point {x0} is not in dom f")
    if cap is None:
        if f.universe is None:
            raise ValueError("an iteration cap is required for functions without a universe")
        cap = f.universe.diameter + 2
    g = _Counted(f)
    path, values, calls = _descend(g, x0, cap)
    L = None
    if with_L:
        _, mins = brute_force_argmin(f, f.universe)
        L = min(chebyshev_distance(x0, m) for m in mins)
    return DescentTrace(path, values, calls, g.evals, path[-1], L)


@dataclass
class ScalingTrace:
    alphas: List[int]
    phase_minimizers: List[Point]
    phase_calls: List[int]
    total_calls: int
    K_inf: int
    minimizer: Point
    value: object = None
    certified: bool = False
    phase_steps: List[List[Point]] = field(default_factory=list)

    @property
    def phases(self) -> int:
        return len(self.alphas)

    def to_dict(self) -> dict:
        return {"alphas": self.alphas, "phase_minimizers": [list(p) for p in self.phase_minimizers],
                "phase_calls": self.phase_calls, "total_calls": self.total_calls, "K_inf": self.K_inf,
                "minimizer": list(self.minimizer), "value": _num(self.value), "certified": self.certified,
                "phase_steps": [[list(y) for y in ys] for ys in self.phase_steps]}


def initial_scale(K_inf: int) -> int:
    """``2 ** ceil(log2(K_inf + 1))``."""
    if K_inf < 0:
        raise ValueError("K_inf must be nonnegative")
    return 1 << int(K_inf).bit_length()


def scaling_minimize(f: LatticeFunction, x0: Sequence[int], K_inf: Optional[int] = None) -> ScalingTrace:
    """Proximity-scaling minimization.

    Each phase runs steepest descent on ``y -> f(x + alpha y)`` from
    ``y = 0`` with neighbours clamped to ``||y||_inf <= n``, then moves to
    ``x + alpha y``.  The phase result must be a 1-local minimum of the
    unconstrained scaled function; if the ball cut it off the function
    cannot be DDM-convex and :class:`DescentError` is raised.

    ``K_inf`` defaults to the l-inf diameter of the universe box.
    """
    x = as_point(x0)
    n = len(x)
    if f(x) == INF:
        raise ValueError(f"starting point {x} is not in dom f")
    if K_inf is None:
        if f.universe is None:
            raise ValueError("K_inf must be given for functions without a universe")
        K_inf = f.universe.diameter
    alpha = initial_scale(K_inf)
    g = _Counted(f)
    alphas, mins, calls, steps = [], [], [], []
    zero = (0,) * n
    in_ball = lambda y: max(abs(c) for c in y) <= n
    while True:
        base, a = x, alpha
        scaled = _Counted(lambda y: g(tuple(b + a * c for b, c in zip(base, y))))
        path, values, used = _descend(scaled, zero, 2 * n + 2, in_ball)
        y = path[-1]
        best, _ = _neighbourhood_argmin(scaled, y, values[-1])
        if best != y:
            raise DescentError(f"phase alpha={alpha} stopped on the ball boundary at y={y}; "
                               "proximity fails, so the function is not DDM-convex")
        x = tuple(b + alpha * c for b, c in zip(base, y))
        alphas.append(alpha)
        mins.append(x)
        calls.append(used)
        steps.append(path)
        if alpha == 1:
            break
        alpha //= 2
    value = f(x)
    return ScalingTrace(alphas, mins, calls, sum(calls), K_inf, x, value, is_global_min(f, x), steps)


def is_global_min(f: LatticeFunction, x: Sequence[int], tol: float = 0) -> bool:
    """``f(x) <= f(x + d)`` for every ``d`` in ``{-1, 0, 1}^n``.

    For integrally convex (in particular DDM-convex) ``f`` this certifies
    global minimality; otherwise it is only a local test.
    """
    x = as_point(x)
    fx = f(x)
    if fx == INF:
        raise ValueError(f"{x} is not in dom f")
    for d in _directions(len(x)):
        if f(tuple(a + b for a, b in zip(x, d))) < fx - tol:
            return False
    return True


def brute_force_argmin(f: LatticeFunction, box: Optional[Box] = None) -> Tuple[object, Tuple[Point, ...]]:
    """Minimum value over ``box`` and all minimizers in lexicographic order."""
    box = box or f.universe
    if box is None:
        raise ValueError("a box is required for functions without a universe")
    if box.size > max_pairs():
        raise ResourceLimitError(f"box of {box.size} points exceeds the enumeration cap")
    P = box.points_array()
    V = f.values(P)
    best = min(V, default=INF)
    if best == INF:
        return INF, ()
    idx = np.flatnonzero(np.asarray(V == best, dtype=bool))
    return best, tuple(tuple(int(c) for c in P[i]) for i in idx)


def _bound(v, default):
    return default if v is None else v


def box_barrier_verify(f: LatticeFunction, p: Sequence, q: Sequence, xhat: Sequence[int], box: Box,
                       tol: float = DEFAULT_TOL) -> Verdict:
    """Empirical check of the box-barrier property on ``box``.

    ``S`` is the open box ``p < x < q`` (``None`` or infinite entries mean no
    bound) and ``W`` the walls ``{x : p <= x <= q, x_i in {p_i, q_i} for some i}``.
    If ``f(xhat) <= f(y)`` on every wall point in ``box`` then every point of
    ``box`` outside ``S`` must also be at least ``f(xhat)``.  A violation
    refutes integral convexity.
    """
    xhat = as_point(xhat)
    n = len(xhat)
    lo = [_bound(v, -INF) for v in p]
    hi = [_bound(v, INF) for v in q]
    if len(lo) != n or len(hi) != n:
        raise ValueError("p, q and xhat must have the same dimension")
    if any(a > b for a, b in zip(lo, hi)):
        raise ValueError("p must be <= q")
    if not all(a < v < b for a, v, b in zip(lo, xhat, hi)):
        raise ValueError(f"xhat={xhat} is not inside the open box")
    fx = f(xhat)
    if fx == INF:
        raise ValueError(f"xhat={xhat} is not in dom f")
    inside = lambda z: all(a < v < b for a, v, b in zip(lo, z, hi))
    closed = lambda z: all(a <= v <= b for a, v, b in zip(lo, z, hi))
    outside = [z for z in box.points() if not inside(z)]
    walls = [z for z in outside if closed(z)]
    for y in walls:
        if f(y) < fx - tol:
            return Verdict(True, None, len(walls), "boxBarrier",
                           {"hypothesis": False, "wall_point": y})
    for k, z in enumerate(outside, 1):
        if f(z) < fx - tol:
            return Verdict(False, Witness(xhat, z, {"f_xhat": fx, "f_z": f(z)}), k, "boxBarrier",
                           {"hypothesis": True})
    return Verdict(True, None, len(outside), "boxBarrier", {"hypothesis": True})


def verify_proximity(f: LatticeFunction, alpha: int, box: Optional[Box] = None) -> Verdict:
    """Every alpha-local minimizer lies within ``n (alpha - 1)`` of a global minimizer.

    The function is taken as ``f`` plus the indicator of ``box``: points of
    ``box`` whose scaled neighbours leave it see ``+inf`` there.
    """
    if int(alpha) != alpha or alpha < 1:
        raise ValueError("alpha must be a positive integer")
    box = box or f.universe
    if box is None:
        raise ValueError("a box is required for functions without a universe")
    if box.size > max_pairs():
        raise ResourceLimitError(f"box of {box.size} points exceeds the enumeration cap")
    n = box.dim
    P = box.points_array()
    V = f.values(P)
    finite = np.asarray(V != INF, dtype=bool)
    if not finite.any():
        return Verdict(True, None, 0, "proximity", {"alpha": alpha, "candidates": 0})
    lo, hi = np.asarray(box.lo), np.asarray(box.hi)
    shape = np.asarray(box.shape)
    strides = np.concatenate([np.cumprod(shape[::-1])[::-1][1:], [1]])
    local = finite.copy()
    for d in _directions(n):
        Q = P + alpha * np.asarray(d)
        ok = np.all((Q >= lo) & (Q <= hi), axis=1)
        vals = np.full(len(P), INF, dtype=object if V.dtype == object else float)
        vals[ok] = V[((Q[ok] - lo) @ strides)]
        local &= ~np.asarray(vals < V, dtype=bool)
    best = V[finite].min()
    M = P[np.asarray(V == best, dtype=bool)]
    C = P[local]
    dist = np.abs(C[:, None, :] - M[None, :, :]).max(axis=2).min(axis=1)
    bound = n * (alpha - 1)
    detail = {"alpha": alpha, "bound": bound, "candidates": int(len(C)),
              "max_distance": int(dist.max()) if len(dist) else 0}
    bad = np.flatnonzero(dist > bound)
    if len(bad):
        i = int(bad[0])
        x = tuple(int(c) for c in C[i])
        near = M[np.abs(M - C[i]).max(axis=1).argmin()]
        return Verdict(False, Witness(x, tuple(int(c) for c in near), {"distance": int(dist[i])}),
                       i + 1, "proximity", detail)
    return Verdict(True, None, int(len(C)), "proximity", detail)
