"""Convex functions in real variables and their fractional lattice restrictions.

A real convex ``F`` is probed through ``f^{1/alpha}(x) = F(x / alpha)`` on
integer points.  Three families are supported: quadratics
``x^T Q x + c^T x``, 2-separable sums of closed-form univariate convex
pieces, and the indicator of the standard simplex ``conv{e_1, ..., e_n}``.
Continuous minimization uses the closed form ``-Q^{-1} c / 2`` where it
applies and a conic solver (cvxpy) otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .classify import DEFAULT_TOL, Verdict, Witness, is_ddm_convex
from .functions import INF, Box, LatticeFunction, QuadraticSpec, TwoSeparableSpec, UnivariateConvex
from .minimize import brute_force_argmin

FAMILIES = ("quadratic", "two_separable", "simplex_indicator")


@dataclass(frozen=True)
class RealBox:
    """Closed real box; ``None`` entries are unbounded."""

    lo: Tuple[Optional[float], ...]
    hi: Tuple[Optional[float], ...]

    @property
    def bounded(self) -> bool:
        return all(v is not None for v in self.lo + self.hi)

    def __contains__(self, x) -> bool:
        return all((a is None or v >= a) and (b is None or v <= b) for a, v, b in zip(self.lo, x, self.hi))

    def to_dict(self):
        return {"lo": list(self.lo), "hi": list(self.hi)}


class ContinuousFunction:
    """A convex function on ``R^n`` from one of the supported families.

    Build with :meth:`quadratic`, :meth:`two_separable` or
    :meth:`simplex_indicator`.  ``universe`` (a :class:`RealBox`) makes the
    function ``+inf`` outside it.
    """

    def __init__(self, family: str, spec, n: int, universe: Optional[RealBox] = None):
        if family not in FAMILIES:
            raise ValueError(f"unknown continuous family {family!r}")
        if universe is not None and len(universe.lo) != n:
            raise ValueError("universe dimension does not match")
        self.family = family
        self.spec = spec
        self.n = n
        self.universe = universe
        self.box: Optional[Box] = None

    @classmethod
    def quadratic(cls, Q, c=None, universe: Optional[RealBox] = None):
        spec = QuadraticSpec(Q, c)
        return cls("quadratic", spec, spec.n, universe)

    @classmethod
    def two_separable(cls, spec: TwoSeparableSpec, universe: Optional[RealBox] = None):
        for p in spec.pieces():
            if p.kind == "table":
                raise ValueError("continuous 2-separable pieces must be closed-form, not tables")
        return cls("two_separable", spec, spec.n, universe)

    @classmethod
    def simplex_indicator(cls, n: int = 3):
        """0 on ``{x >= 0, sum x = 1}`` and ``+inf`` elsewhere."""
        return cls("simplex_indicator", None, n, RealBox((0,) * n, (1,) * n))

    def __call__(self, x):
        if len(x) != self.n:
            raise ValueError("point dimension does not match")
        if self.universe is not None and x not in self.universe:
            return INF
        if self.family == "simplex_indicator":
            x = [Fraction(v) for v in x]
            return 0 if all(v >= 0 for v in x) and sum(x) == 1 else INF
        return self.spec([float(v) for v in x])

    def batch(self, X: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on float rows (not used for the exact simplex family)."""
        X = np.asarray(X, dtype=float)
        out = np.asarray(self.spec.batch(X), dtype=float)
        if self.universe is not None:
            mask = np.ones(len(X), dtype=bool)
            for i, (a, b) in enumerate(zip(self.universe.lo, self.universe.hi)):
                if a is not None:
                    mask &= X[:, i] >= a
                if b is not None:
                    mask &= X[:, i] <= b
            out = np.where(mask, out, INF)
        return out


def fractional_restriction(F: ContinuousFunction, alpha: int, box: Box) -> LatticeFunction:
    """Lattice oracle ``x -> F(x / alpha)`` on ``box``."""
    if int(alpha) != alpha or alpha < 1:
        raise ValueError("alpha must be a positive integer")
    if box.dim != F.n:
        raise ValueError("box dimension does not match the function")
    alpha = int(alpha)

    def ev(x):
        return F(tuple(Fraction(v, alpha) for v in x))

    batch = None
    if F.family != "simplex_indicator":
        batch = lambda X: F.batch(np.asarray(X, dtype=float) / alpha)
    return LatticeFunction(F.n, ev, box, f"restriction(1/{alpha})", batch, meta={"alpha": alpha})


def verify_r_ddm(F: ContinuousFunction, alpha_max: int, box: Box, tol: float = DEFAULT_TOL) -> Verdict:
    """Run the DDM verifier on ``f^{1/alpha}`` over ``alpha * box`` for ``alpha = 1..alpha_max``.

    Passing is evidence up to ``alpha_max`` only; the first failing alpha is
    reported in the witness.
    """
    pairs = 0
    for alpha in range(1, alpha_max + 1):
        v = is_ddm_convex(fractional_restriction(F, alpha, box.scaled(alpha)), tol=tol)
        pairs += v.pairs_checked
        if not v.holds:
            v.witness.extra["alpha"] = alpha
            return Verdict(False, v.witness, pairs, "RDDM", {"failed_alpha": alpha, "alpha_max": alpha_max})
    return Verdict(True, None, pairs, "RDDM", {"evidence_up_to_alpha": alpha_max})


# ---------------------------------------------------------------------------
# continuous minimization


def _piece_expr(cp, g: UnivariateConvex, t):
    p = g.params
    k = g.kind
    cons = []
    if g.domain is not None:
        lo, hi = g.domain
        if lo is not None:
            cons.append(t >= lo)
        if hi is not None:
            cons.append(t <= hi)
    if k == "affine":
        return p["slope"] * t + p["intercept"], cons
    if k == "abs":
        return p["w"] * cp.abs(t - p["a"]), cons
    if k == "square":
        return p["w"] * cp.square(t - p["a"]), cons
    if k == "quadratic":
        return p["a2"] * cp.square(t) + p["a1"] * t + p["a0"], cons
    if k == "affine_max":
        return cp.max(cp.hstack([s * t + b for s, b in p["lines"]])), cons
    raise ValueError(f"piece kind {k!r} has no continuous form")


def _model(F: ContinuousFunction):
    """cvxpy variable, objective expression and constraints for ``F``."""
    import cvxpy as cp

    x = cp.Variable(F.n)
    cons = []
    if F.universe is not None:
        for i, (a, b) in enumerate(zip(F.universe.lo, F.universe.hi)):
            if a is not None:
                cons.append(x[i] >= a)
            if b is not None:
                cons.append(x[i] <= b)
    if F.family == "quadratic":
        Q, c = F.spec.Q, F.spec.c
        if np.linalg.eigvalsh(Q).min() < -1e-12:
            raise ValueError("Q is not positive semidefinite; F is not convex")
        obj = cp.quad_form(x, cp.psd_wrap(Q)) + c @ x
    elif F.family == "two_separable":
        terms = []
        s = F.spec
        for i, g in s.xi.items():
            e, c2 = _piece_expr(cp, g, x[i])
            terms.append(e)
            cons += c2
        for (i, j), g in s.phi.items():
            e, c2 = _piece_expr(cp, g, x[i] - x[j])
            terms.append(e)
            cons += c2
        for (i, j), g in s.psi.items():
            e, c2 = _piece_expr(cp, g, x[i] + x[j])
            terms.append(e)
            cons += c2
        obj = cp.sum(cp.hstack(terms)) if terms else cp.Constant(0)
    else:
        cons += [x >= 0, cp.sum(x) == 1]
        obj = cp.Constant(0)
    return cp, x, obj, cons


def _solve(cp, objective, cons, what):
    prob = cp.Problem(cp.Minimize(objective), cons)
    try:
        prob.solve(solver=cp.CLARABEL)
    except cp.error.SolverError as exc:
        raise RuntimeError(f"{what}: solver failed ({exc})") from exc
    if prob.status not in ("optimal", "optimal_inaccurate"):
        raise RuntimeError(f"{what}: solver status {prob.status}")
    return prob.value


def _is_strictly_convex_2sep(spec: TwoSeparableSpec) -> bool:
    if len(spec.xi) != spec.n:
        return False
    for g in spec.xi.values():
        if g.kind == "square" and g.params["w"] > 0:
            continue
        if g.kind == "quadratic" and g.params["a2"] > 0:
            continue
        return False
    return True


def _continuous_min(F: ContinuousFunction):
    if F.family == "quadratic":
        Q, c = F.spec.Q, F.spec.c
        if abs(np.linalg.det(Q)) < 1e-12:
            raise ValueError("Q is singular; the minimizer is not determined by -Q^{-1}c/2")
        if np.linalg.eigvalsh(Q).min() <= 0:
            raise ValueError("Q is not positive definite; F has no minimizer")
        xbar = -0.5 * np.linalg.solve(Q, c)
        if F.universe is None or tuple(xbar) in F.universe:
            return xbar, F.spec(xbar), True
    cp, x, obj, cons = _model(F)
    value = _solve(cp, obj, cons, "continuous argmin")
    unique = F.family == "quadratic" or (F.family == "two_separable" and _is_strictly_convex_2sep(F.spec))
    return np.asarray(x.value, dtype=float), float(value), unique


def continuous_argmin(F: ContinuousFunction) -> Tuple[np.ndarray, bool]:
    """A minimizer of ``F`` and whether it is the unique one.

    Quadratics use ``-Q^{-1} c / 2`` (singular ``Q`` is rejected) unless a
    universe cuts that point off.  Everything else goes through a conic
    solver.  Uniqueness is reported for positive-definite quadratics and for
    2-separable functions whose every coordinate term is a strictly convex
    square, both strictly convex.
    """
    x, _, unique = _continuous_min(F)
    return x, unique


def _argmin_extremes(F: ContinuousFunction, fstar: float, slack: float):
    """Points of the (slightly relaxed) minimizer set extreme in each coordinate."""
    out = []
    for i in range(F.n):
        for sign in (1, -1):
            cp, x, obj, cons = _model(F)
            _solve(cp, sign * x[i], cons + [obj <= fstar + slack], "argmin extreme")
            out.append(np.asarray(x.value, dtype=float))
    return out


def _nearest_minimizer(F: ContinuousFunction, point, fstar: float, slack: float) -> float:
    cp, x, obj, cons = _model(F)
    t = cp.Variable()
    p = np.asarray(point, dtype=float)
    return float(_solve(cp, t, cons + [obj <= fstar + slack, cp.abs(x - p) <= t], "nearest minimizer"))


def verify_continuous_proximity(F: ContinuousFunction, box: Box, tol: float = 1e-6) -> Verdict:
    """Check the three discrete/continuous minimizer proximity statements on ``box``.

    (i) every discrete minimizer has a continuous minimizer within ``n``;
    (ii) with a unique continuous minimizer, some discrete minimizer lies
    within ``n`` of it; (iii) with a bounded universe, the coordinate-extreme
    continuous minimizers each have a discrete minimizer within ``n``.
    Solver failures or a box not covering the continuous minimizer give an
    inconclusive verdict, never a false one.
    """
    n = F.n
    f = fractional_restriction(F, 1, box)
    fmin, mins = brute_force_argmin(f, box)
    name = "continuousProximity"
    if fmin == INF:
        return Verdict(True, None, 0, name, {"reason": "no finite lattice point in box"}, inconclusive=True)
    try:
        xbar, Fstar, unique = _continuous_min(F)
    except (RuntimeError, ValueError) as exc:
        return Verdict(True, None, 0, name, {"reason": str(exc)}, inconclusive=True)
    slack = 1e-7 * (1 + abs(Fstar))
    detail = {"xbar": [float(v) for v in xbar], "unique": unique, "bound": n,
              "discrete_minimizers": [list(m) for m in mins]}
    if unique and not all(lo <= v - (n + 1) and v + (n + 1) <= hi
                          for lo, v, hi in zip(box.lo, xbar, box.hi)):
        if F.universe is None or not F.universe.bounded:
            detail["reason"] = "box does not cover xbar +- (n+1)"
            return Verdict(True, None, 0, name, detail, inconclusive=True)
    checked = 0
    dists = []
    try:
        for m in mins:
            checked += 1
            if unique:
                d = float(np.abs(np.asarray(m) - xbar).max())
            else:
                d = _nearest_minimizer(F, m, Fstar, slack)
            dists.append(d)
            if d > n + tol:
                return Verdict(False, Witness(m, None, {"check": "i", "distance": d}), checked, name, detail)
        targets = []
        if unique:
            targets.append(("ii", xbar))
        if F.universe is not None and F.universe.bounded:
            targets += [("iii", p) for p in ([xbar] if unique else _argmin_extremes(F, Fstar, slack))]
    except RuntimeError as exc:
        detail["reason"] = str(exc)
        return Verdict(True, None, checked, name, detail, inconclusive=True)
    M = np.asarray(mins, dtype=float)
    for label, p in targets:
        checked += 1
        d = float(np.abs(M - p).max(axis=1).min())
        dists.append(d)
        if d > n + tol:
            nearest = mins[int(np.abs(M - p).max(axis=1).argmin())]
            return Verdict(False, Witness(nearest, None, {"check": label, "continuous_point": list(p),
                                                          "distance": d}), checked, name, detail)
    detail["max_distance"] = max(dists) if dists else 0.0
    return Verdict(True, None, checked, name, detail)
