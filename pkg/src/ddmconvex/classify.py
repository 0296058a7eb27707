"""Brute-force convexity verifiers over a box.

Every verifier enumerates unordered pairs ``{x, y}`` of finite points of
``f`` inside ``box`` in lexicographic order (``x`` before ``y``, pairs
ordered by ``x`` then ``y``) and tests one inequality family.  A pair with
an infinite side is vacuous.  A violation needs ``lhs < rhs - tol``; the
first violating pair is reported as the witness.  Every point the
inequalities touch (midpoints, parallelogram corners, joins and meets)
lies in the box spanned by ``x`` and ``y``, so evaluation never leaves
``box``: the verdict is about ``f`` restricted to ``box``.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Sequence

import numpy as np

from .errors import LPError, ResourceLimitError
from .functions import INF, Box, LatticeFunction
from .lattice import (Point, as_point, chebyshev_distance, directed_midpoint_pair, level_direction_array,
                      mu_arrays, rounded_midpoint_arrays, rounded_midpoint_pair)
from .lp import simplex_eq

DEFAULT_TOL = 1e-9
DEFAULT_MAX_PAIRS = 50_000_000
_BLOCK = 1 << 16


def max_pairs() -> int:
    """Pair-enumeration cap, overridable through ``DDMC_MAX_PAIRS``."""
    return int(os.environ.get("DDMC_MAX_PAIRS", DEFAULT_MAX_PAIRS))


@dataclass
class Witness:
    x: Point
    y: Optional[Point] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"x": list(self.x), "y": None if self.y is None else list(self.y)}
        for k, v in self.extra.items():
            d[k] = _jsonable(v)
        return d


@dataclass
class Verdict:
    """Outcome of one verifier.  ``holds=False`` always comes with a witness."""

    holds: bool
    witness: Optional[Witness] = None
    pairs_checked: int = 0
    name: str = ""
    detail: dict = field(default_factory=dict)
    inconclusive: bool = False

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        d = {"class": self.name, "holds": self.holds,
             "witness": None if self.witness is None else self.witness.to_dict(),
             "pairs_checked": self.pairs_checked}
        if self.inconclusive:
            d["inconclusive"] = True
        if self.detail:
            d["detail"] = {k: _jsonable(v) for k, v in self.detail.items()}
        return d


def _jsonable(v):
    if isinstance(v, Fraction):
        return float(v)
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    if isinstance(v, (tuple, list)):
        return [_jsonable(u) for u in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(u) for k, u in v.items()}
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return _jsonable(float(v))
    if isinstance(v, (frozenset, set)):
        return sorted(_jsonable(u) for u in v)
    return v


def _less(lhs, rhs, tol):
    """Elementwise ``lhs < rhs - tol`` (works on float and object arrays)."""
    if tol:
        rhs = rhs - tol
    return np.asarray(lhs < rhs, dtype=bool)


# ---------------------------------------------------------------------------
# tabulated view of f on a box


class _Grid:
    def __init__(self, f: LatticeFunction, box: Optional[Box]):
        box = box or f.universe
        if box is None:
            raise ValueError("a box is required for functions without a universe")
        if box.dim != f.dim:
            raise ValueError("box dimension does not match the function")
        self.f = f
        self.box = box
        self.lo = np.asarray(box.lo, dtype=np.int64)
        self.hi = np.asarray(box.hi, dtype=np.int64)
        shape = np.asarray(box.shape, dtype=np.int64)
        self.strides = np.concatenate([np.cumprod(shape[::-1])[::-1][1:], [1]]).astype(np.int64)
        self.P = box.points_array()
        self.V = f.values(self.P)
        self.finite = np.asarray(self.V != INF, dtype=bool)
        self.fidx = np.flatnonzero(self.finite)

    @property
    def n_finite(self) -> int:
        return len(self.fidx)

    def lookup(self, Q: np.ndarray) -> np.ndarray:
        return self.V[(Q - self.lo) @ self.strides]

    def value(self, x) -> object:
        return self.f(x)

    def max_finite_distance(self) -> int:
        if self.n_finite < 2:
            return 0
        F = self.P[self.fidx]
        return int((F.max(axis=0) - F.min(axis=0)).max())

    def pair_blocks(self):
        """Index arrays ``(I, J)`` into ``P`` over finite pairs, lexicographically."""
        k = self.n_finite
        total = k * (k - 1) // 2
        if total > max_pairs():
            raise ResourceLimitError(f"{total} pairs exceed the cap of {max_pairs()} (DDMC_MAX_PAIRS)")
        r = 0
        while r < k - 1:
            start, count = r, 0
            while r < k - 1 and count < _BLOCK:
                count += k - 1 - r
                r += 1
            I = np.concatenate([np.full(k - 1 - i, i, dtype=np.int64) for i in range(start, r)])
            J = np.concatenate([np.arange(i + 1, k, dtype=np.int64) for i in range(start, r)])
            yield self.fidx[I], self.fidx[J]


def _point(row) -> Point:
    return tuple(int(v) for v in row)


def _scan(grid: _Grid, name: str, violations: Callable, explain: Callable,
          relevant: Optional[Callable] = None) -> Verdict:
    """Run a vectorized pair test and return the first violation in order.

    ``violations(X, Y, VX, VY)`` returns a boolean array; ``relevant`` (same
    signature minus values) marks pairs counted as checked; ``explain(x, y)``
    recomputes the witness data for a single pair.
    """
    checked = 0
    for I, J in grid.pair_blocks():
        X, Y = grid.P[I], grid.P[J]
        VX, VY = grid.V[I], grid.V[J]
        rel = np.ones(len(I), dtype=bool) if relevant is None else relevant(X, Y)
        bad = violations(X, Y, VX, VY) & rel
        if bad.any():
            first = int(np.argmax(bad))
            checked += int(rel[:first + 1].sum())
            x, y = _point(X[first]), _point(Y[first])
            return Verdict(False, Witness(x, y, explain(x, y)), checked, name)
        checked += int(rel.sum())
    return Verdict(True, None, checked, name)


def _dist(X, Y):
    return np.abs(X - Y).max(axis=1)


def _pair_values(grid, p, q, lhs):
    vp, vq = grid.value(p), grid.value(q)
    return {"p": p, "q": q, "lhs": lhs, "rhs": vp + vq}


# ---------------------------------------------------------------------------
# DDM, L-natural, global/local discrete midpoint convexity, submodularity


def is_ddm_convex(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL) -> Verdict:
    """``f(x) + f(y) >= f(mu(x,y)) + f(mu(y,x))`` for all pairs in ``box``."""
    g = _Grid(f, box)

    def viol(X, Y, VX, VY):
        A, B = mu_arrays(X, Y)
        return _less(VX + VY, g.lookup(A) + g.lookup(B), tol)

    def explain(x, y):
        p, q = directed_midpoint_pair(x, y)
        return _pair_values(g, p, q, g.value(x) + g.value(y))

    return _scan(g, "DDM", viol, explain)


def _dmc_viol(g, tol):
    def viol(X, Y, VX, VY):
        A, B = rounded_midpoint_arrays(X, Y)
        return _less(VX + VY, g.lookup(A) + g.lookup(B), tol)
    return viol


def _dmc_explain(g):
    def explain(x, y):
        p, q = rounded_midpoint_pair(x, y)
        return _pair_values(g, p, q, g.value(x) + g.value(y))
    return explain


def is_lnat_convex(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL) -> Verdict:
    """Discrete midpoint convexity with plain rounding for every pair."""
    g = _Grid(f, box)
    return _scan(g, "Lnat", _dmc_viol(g, tol), _dmc_explain(g))


def is_globally_dmc(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL) -> Verdict:
    g = _Grid(f, box)
    far = lambda X, Y: _dist(X, Y) >= 2
    return _scan(g, "globalDMC", _dmc_viol(g, tol), _dmc_explain(g), far)


def is_locally_dmc(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL) -> Verdict:
    """dom f is a discrete midpoint convex set and the inequality holds at distance exactly 2."""
    g = _Grid(f, box)

    def viol(X, Y, VX, VY):
        A, B = rounded_midpoint_arrays(X, Y)
        va, vb = g.lookup(A), g.lookup(B)
        hole = np.asarray((va == INF) | (vb == INF), dtype=bool)
        return hole | ((_dist(X, Y) == 2) & _less(VX + VY, va + vb, tol))

    far = lambda X, Y: _dist(X, Y) >= 2
    return _scan(g, "localDMC", viol, _dmc_explain(g), far)


def classify_dmc(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL):
    """``(global, local)`` discrete midpoint convexity verdicts."""
    return is_globally_dmc(f, box, tol), is_locally_dmc(f, box, tol)


def is_submodular(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL) -> Verdict:
    """``f(x) + f(y) >= f(x v y) + f(x ^ y)``."""
    g = _Grid(f, box)

    def viol(X, Y, VX, VY):
        return _less(VX + VY, g.lookup(np.maximum(X, Y)) + g.lookup(np.minimum(X, Y)), tol)

    def explain(x, y):
        p = tuple(map(max, x, y))
        q = tuple(map(min, x, y))
        return _pair_values(g, p, q, g.value(x) + g.value(y))

    return _scan(g, "submodular", viol, explain)


def is_translation_submodular(f: LatticeFunction, box: Optional[Box] = None,
                              tol: float = DEFAULT_TOL) -> Verdict:
    """``f(x) + f(y) >= f((x - a1) v y) + f(x ^ (y + a1))`` for all ordered pairs and ``a >= 0``."""
    g = _Grid(f, box)
    top = g.max_finite_distance()

    def one(X, Y, VX, VY, a):
        p = np.maximum(X - a, Y)
        q = np.minimum(X, Y + a)
        return _less(VX + VY, g.lookup(p) + g.lookup(q), tol)

    def viol(X, Y, VX, VY):
        bad = np.zeros(len(X), dtype=bool)
        for a in range(top + 1):
            bad |= one(X, Y, VX, VY, a) | one(Y, X, VY, VX, a)
        return bad

    def explain(x, y):
        s = g.value(x) + g.value(y)
        for a in range(top + 1):
            for u, v in ((x, y), (y, x)):
                p = tuple(max(ui - a, vi) for ui, vi in zip(u, v))
                q = tuple(min(ui, vi + a) for ui, vi in zip(u, v))
                if s < g.value(p) + g.value(q) - tol:
                    return {"order": [u, v], "alpha": a, **_pair_values(g, p, q, s)}
        return {}

    return _scan(g, "translationSubmodular", viol, explain)


def is_lnat_by_argmax_exchange(f: LatticeFunction, box: Optional[Box] = None,
                               tol: float = DEFAULT_TOL) -> Verdict:
    """``f(x) + f(y) >= f(x + 1_A) + f(y - 1_A)`` with ``A = argmax_i (y_i - x_i)`` whenever ``x`` is not ``>= y``."""
    g = _Grid(f, box)

    def one(X, Y, VX, VY):
        D = Y - X
        top = D.max(axis=1)
        active = top > 0
        A = ((D == top[:, None]) & active[:, None]).astype(np.int64)
        return active & _less(VX + VY, g.lookup(X + A) + g.lookup(Y - A), tol)

    def viol(X, Y, VX, VY):
        return one(X, Y, VX, VY) | one(Y, X, VY, VX)

    def explain(x, y):
        s = g.value(x) + g.value(y)
        for u, v in ((x, y), (y, x)):
            d = [b - a for a, b in zip(u, v)]
            if max(d) <= 0:
                continue
            A = [int(di == max(d)) for di in d]
            p = tuple(a + e for a, e in zip(u, A))
            q = tuple(b - e for b, e in zip(v, A))
            if s < g.value(p) + g.value(q) - tol:
                return {"order": [u, v], **_pair_values(g, p, q, s)}
        return {}

    return _scan(g, "LnatArgmaxExchange", viol, explain)


# ---------------------------------------------------------------------------
# Five equivalent characterizations of DDM-convexity


def _levels_sum(D, ks):
    out = np.zeros_like(D)
    for k in ks:
        out += level_direction_array(D, k)
    return out


def check_ddm_characterization(f: LatticeFunction, box: Optional[Box] = None, variant: int = 1,
                               tol: float = DEFAULT_TOL, max_m: int = 8, skip_above: bool = False) -> Verdict:
    """Check one of the five equivalent forms of DDM-convexity.

    1. the defining inequality for all pairs;
    2. dom f is a DDM set and the inequality holds at distance 2;
    3. the parallelogram inequality ``f(x)+f(y) >= f(x+d)+f(y-d)`` for
       ``d = sum_{k in J} (1_{A_k} - 1_{B_k})`` and every ``J``;
    4. the same with ``d = 1_{A_m} - 1_{B_m}``, i.e. moving only the
       outermost level;
    5. the same with ``d = sum_{k <= a} (1_{A_k} - 1_{B_k})`` for ``a = 1..m``.

    Variant 3 enumerates ``2^m`` subsets; pairs with ``m > max_m`` raise
    :class:`ResourceLimitError`, or are skipped when ``skip_above`` is set.
    """
    if variant == 1:
        v = is_ddm_convex(f, box, tol)
        v.name = "char1"
        return v
    g = _Grid(f, box)
    name = f"char{variant}"

    if variant == 2:
        def viol(X, Y, VX, VY):
            A, B = mu_arrays(X, Y)
            va, vb = g.lookup(A), g.lookup(B)
            hole = np.asarray((va == INF) | (vb == INF), dtype=bool)
            return hole | ((_dist(X, Y) == 2) & _less(VX + VY, va + vb, tol))

        def explain(x, y):
            p, q = directed_midpoint_pair(x, y)
            d = _pair_values(g, p, q, g.value(x) + g.value(y))
            d["reason"] = "domain" if d["rhs"] == INF else "distance-2 inequality"
            return d

        return _scan(g, name, viol, explain)

    if variant == 3:
        M = g.max_finite_distance()
        if M > max_m and not skip_above:
            raise ResourceLimitError(f"parallelogram check needs 2^{M} subsets (cap m <= {max_m})")
        M = min(M, max_m)
        subsets = [J for r in range(1, M + 1) for J in itertools.combinations(range(1, M + 1), r)]
        relevant = (lambda X, Y: _dist(X, Y) <= max_m) if skip_above else None

        def viol(X, Y, VX, VY):
            D = Y - X
            lhs = VX + VY
            bad = np.zeros(len(X), dtype=bool)
            for J in subsets:
                d = _levels_sum(D, J)
                bad |= _less(lhs, g.lookup(X + d) + g.lookup(Y - d), tol)
            if relevant is not None:
                bad &= relevant(X, Y)
            return bad

        def explain(x, y):
            s = g.value(x) + g.value(y)
            D = np.asarray([y], dtype=np.int64) - np.asarray([x], dtype=np.int64)
            m = int(np.abs(D).max())
            for J in subsets:
                if max(J) > m:
                    continue
                d = _point(_levels_sum(D, J)[0])
                p = tuple(a + b for a, b in zip(x, d))
                q = tuple(a - b for a, b in zip(y, d))
                if s < g.value(p) + g.value(q) - tol:
                    return {"J": list(J), **_pair_values(g, p, q, s)}
            return {}

        return _scan(g, name, viol, explain, relevant)

    if variant == 4:
        def outer(X, Y):
            D = Y - X
            m = np.abs(D).max(axis=1)[:, None]
            return (D >= m).astype(np.int64) - (D <= -m).astype(np.int64)

        def viol(X, Y, VX, VY):
            e = outer(X, Y)
            return _less(VX + VY, g.lookup(X + e) + g.lookup(Y - e), tol)

        def explain(x, y):
            e = _point(outer(np.asarray([x]), np.asarray([y]))[0])
            p = tuple(a + b for a, b in zip(x, e))
            q = tuple(a - b for a, b in zip(y, e))
            return _pair_values(g, p, q, g.value(x) + g.value(y))

        return _scan(g, name, viol, explain)

    if variant == 5:
        M = g.max_finite_distance()

        def viol(X, Y, VX, VY):
            D = Y - X
            lhs = VX + VY
            bad = np.zeros(len(X), dtype=bool)
            for a in range(1, M + 1):
                d = np.clip(D, -a, a)
                bad |= _less(lhs, g.lookup(X + d) + g.lookup(Y - d), tol)
            return bad

        def explain(x, y):
            s = g.value(x) + g.value(y)
            m = chebyshev_distance(x, y)
            for a in range(1, m + 1):
                d = [max(-a, min(a, b - c)) for b, c in zip(y, x)]
                p = tuple(u + v for u, v in zip(x, d))
                q = tuple(u - v for u, v in zip(y, d))
                if s < g.value(p) + g.value(q) - tol:
                    return {"alpha": a, **_pair_values(g, p, q, s)}
            return {}

        return _scan(g, name, viol, explain)

    raise ValueError("variant must be 1..5")


def check_parallelogram(f: LatticeFunction, box: Optional[Box] = None, max_m: int = 4,
                        tol: float = DEFAULT_TOL) -> Verdict:
    """Parallelogram inequality for every subset ``J``, restricted to pairs with ``m <= max_m``."""
    v = check_ddm_characterization(f, box, 3, tol, max_m=max_m, skip_above=True)
    v.name = "parallelogram"
    return v


# ---------------------------------------------------------------------------
# local convex envelope and integral convexity


def _neighbourhood(z):
    """Integer points ``w`` with ``|w_i - z_i| < 1`` and the fractional coordinates."""
    axes, frac = [], []
    for i, zi in enumerate(z):
        if zi.denominator == 1:
            axes.append((int(zi),))
        else:
            fl = math.floor(zi)
            axes.append((fl, fl + 1))
            frac.append(i)
    return list(itertools.product(*axes)), frac


def _envelope(z, values: Dict[Point, object]):
    """LP value at rational ``z`` given the neighbour values (``inf`` allowed)."""
    pts, frac = _neighbourhood(z)
    live = [(w, values[w]) for w in pts if values[w] != INF]
    if not live:
        return INF
    if not frac:
        return live[0][1]
    A = [[w[i] for w, _ in live] for i in frac] + [[1] * len(live)]
    b = [z[i] for i in frac] + [1]
    res = simplex_eq([v for _, v in live], A, b)
    if res.status == "infeasible":
        return INF
    if res.status != "optimal":
        raise LPError(f"envelope LP at {z} ended with status {res.status}")
    if all(isinstance(v, (int, Fraction)) for _, v in live):
        return res.value
    return float(res.value)


def local_convex_envelope(f: LatticeFunction, z: Sequence) -> object:
    """Value of the local convex envelope of ``f`` at the rational point ``z``.

    Solves ``min sum_w lam_w f(w)`` over convex combinations of the integer
    neighbours ``N(z) = {w : |w_i - z_i| < 1}`` that reproduce ``z``.
    Returns ``+inf`` when no finite combination exists.
    """
    z = [Fraction(v) for v in z]
    if len(z) != f.dim:
        raise ValueError("point dimension does not match the function")
    pts, _ = _neighbourhood(z)
    return _envelope(z, {w: f(w) for w in pts})


def is_integrally_convex(f: LatticeFunction, box: Optional[Box] = None, tol: float = DEFAULT_TOL) -> Verdict:
    """Weak discrete midpoint convexity ``f(x) + f(y) >= 2 env((x+y)/2)`` at distance >= 2.

    A pair already satisfying the DDM or the plain-rounding inequality
    satisfies the weak one (both midpoint pairs are feasible for the
    envelope LP), so the LP is only solved for the remaining pairs,
    once per distinct midpoint.
    """
    g = _Grid(f, box)
    cache: Dict[Point, object] = {}

    def env(s: Point):
        if s not in cache:
            z = [Fraction(v, 2) for v in s]
            pts, _ = _neighbourhood(z)
            vals = {w: g.lookup(np.asarray([w]))[0] for w in pts}
            cache[s] = _envelope(z, vals)
        return cache[s]

    def viol(X, Y, VX, VY):
        lhs = VX + VY
        A, B = mu_arrays(X, Y)
        C, D = rounded_midpoint_arrays(X, Y)
        easy = ~_less(lhs, g.lookup(A) + g.lookup(B), tol) | ~_less(lhs, g.lookup(C) + g.lookup(D), tol)
        hard = np.flatnonzero(~easy & (_dist(X, Y) >= 2))
        bad = np.zeros(len(X), dtype=bool)
        for i in hard:
            e = env(_point(X[i] + Y[i]))
            bad[i] = lhs[i] < 2 * e - tol if tol else lhs[i] < 2 * e
        return bad

    def explain(x, y):
        s = tuple(a + b for a, b in zip(x, y))
        e = env(s)
        return {"midpoint": [Fraction(v, 2) for v in s], "lhs": g.value(x) + g.value(y), "rhs": 2 * e}

    far = lambda X, Y: _dist(X, Y) >= 2
    return _scan(g, "integrallyConvex", viol, explain, far)


# ---------------------------------------------------------------------------
# domain shape


def is_box_domain(f: LatticeFunction, box: Optional[Box] = None) -> Verdict:
    """Whether ``dom f`` inside ``box`` is itself an integer box.

    This is the domain condition of separable convex functions (reported
    under the class name ``separableConvexDomainOnly``).
    """
    g = _Grid(f, box)
    name = "separableConvexDomainOnly"
    if g.n_finite == 0:
        return Verdict(True, None, 0, name)
    F = g.P[g.fidx]
    hull = Box(_point(F.min(axis=0)), _point(F.max(axis=0)))
    for w in hull.points():
        if g.lookup(np.asarray([w]))[0] == INF:
            return Verdict(False, Witness(w, None, {"reason": "hole in the bounding box of dom f",
                                                    "hull": hull.to_dict()}), hull.size, name)
    return Verdict(True, None, hull.size, name)


# ---------------------------------------------------------------------------
# sets


def _set_check(points, name, pair_fn, relevant):
    pts = sorted({as_point(p) for p in points})
    S = set(pts)
    checked = 0
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if not relevant(x, y):
                continue
            checked += 1
            p, q = pair_fn(x, y)
            if p not in S or q not in S:
                missing = [r for r in (p, q) if r not in S]
                return Verdict(False, Witness(x, y, {"p": p, "q": q, "missing": missing}), checked, name)
    return Verdict(True, None, checked, name)


def is_ddm_set(points: Iterable[Sequence[int]]) -> Verdict:
    """Closure under ``(mu(x,y), mu(y,x))`` for every pair."""
    return _set_check(points, "DDMset", directed_midpoint_pair, lambda x, y: True)


def is_dmc_set(points: Iterable[Sequence[int]]) -> Verdict:
    """Closure under rounded midpoints for pairs at l-inf distance >= 2."""
    return _set_check(points, "DMCset", rounded_midpoint_pair, lambda x, y: chebyshev_distance(x, y) >= 2)


# ---------------------------------------------------------------------------
# report


CLASS_CHECKS = {
    "DDM": is_ddm_convex,
    "Lnat": is_lnat_convex,
    "globalDMC": is_globally_dmc,
    "localDMC": is_locally_dmc,
    "integrallyConvex": is_integrally_convex,
    "submodular": is_submodular,
    "separableConvexDomainOnly": lambda f, box, tol: is_box_domain(f, box),
}

# (premise, conclusion) pairs that must hold on every report
IMPLICATIONS = [
    ("Lnat", "globalDMC"),
    ("globalDMC", "localDMC"),
    ("localDMC", "integrallyConvex"),
    ("Lnat", "DDM"),
    ("DDM", "integrallyConvex"),
]


@dataclass
class ClassificationReport:
    verdicts: Dict[str, Verdict]
    box: Box

    def __getitem__(self, key) -> Verdict:
        return self.verdicts[key]

    def implication_violations(self) -> list:
        """Broken implications among the classes present (should always be empty)."""
        v = self.verdicts
        out = [f"{a} => {b}" for a, b in IMPLICATIONS if a in v and b in v and v[a].holds and not v[b].holds]
        if {"integrallyConvex", "submodular", "Lnat"} <= v.keys():
            if (v["integrallyConvex"].holds and v["submodular"].holds) != v["Lnat"].holds:
                out.append("integrallyConvex & submodular <=> Lnat")
        return out

    def to_dict(self) -> dict:
        return {"box": self.box.to_dict(), "verdicts": [self.verdicts[k].to_dict() for k in self.verdicts]}


def classify(f: LatticeFunction, box: Optional[Box] = None, classes: Optional[Sequence[str]] = None,
             tol: float = DEFAULT_TOL) -> ClassificationReport:
    box = box or f.universe
    if box is None:
        raise ValueError("a box is required for functions without a universe")
    names = list(CLASS_CHECKS) if classes is None else list(classes)
    verdicts = {}
    for name in names:
        if name not in CLASS_CHECKS:
            raise ValueError(f"unknown class {name!r}")
        verdicts[name] = CLASS_CHECKS[name](f, box, tol)
    return ClassificationReport(verdicts, box)
