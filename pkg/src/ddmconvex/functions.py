"""Function oracles on the integer lattice and the operations that preserve DDM-convexity.

Every oracle is a :class:`LatticeFunction`: a pure evaluator plus an
optional bounding box (its *universe*).  Points outside the universe
evaluate to ``+inf``.  Values are ``int``, ``float`` or
:class:`fractions.Fraction`, or ``math.inf``; NaN and ``-inf`` are rejected
at evaluation time.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import (DimensionMismatchError, NonConvexPieceError, NotDiagonallyDominantError,
                     UnboundedDomainError)
from .lattice import Point, as_point

INF = math.inf
_MAX_COUNT = 2 ** 63 - 1


def check_value(v):
    """Validate an extended value (finite real or +inf) and return it."""
    if isinstance(v, (bool, np.bool_)):
        raise TypeError("boolean is not a function value")
    if isinstance(v, np.generic):
        v = v.item()
    if not isinstance(v, Real):
        raise TypeError(f"function value must be real, got {type(v).__name__}")
    if v != v:
        raise ValueError("NaN is not a valid function value")
    if v == -INF:
        raise ValueError("-inf is not a valid function value")
    return v


def is_finite(v) -> bool:
    return v != INF


# ---------------------------------------------------------------------------
# boxes


@dataclass(frozen=True)
class Box:
    """Axis-aligned integer box ``[lo, hi]``, inclusive on both ends."""

    lo: Point
    hi: Point

    def __post_init__(self):
        lo, hi = as_point(self.lo), as_point(self.hi)
        if len(lo) != len(hi):
            raise DimensionMismatchError("box corners have different dimensions")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValueError(f"empty box: lo={lo} hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if self.size > _MAX_COUNT:
            raise ValueError("box cardinality does not fit a 64-bit count")

    @classmethod
    def cube(cls, lo: int, hi: int, n: int) -> "Box":
        return cls((lo,) * n, (hi,) * n)

    @classmethod
    def bounding(cls, points: Iterable[Sequence[int]]) -> "Box":
        pts = [as_point(p) for p in points]
        if not pts:
            raise ValueError("cannot bound an empty point set")
        return cls(tuple(map(min, zip(*pts))), tuple(map(max, zip(*pts))))

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(b - a + 1 for a, b in zip(self.lo, self.hi))

    @property
    def size(self) -> int:
        return math.prod(self.shape)

    @property
    def diameter(self) -> int:
        """Largest side length ``max_i (hi_i - lo_i)``, the l-inf diameter."""
        return max(b - a for a, b in zip(self.lo, self.hi))

    def __contains__(self, x) -> bool:
        return len(x) == self.dim and all(a <= v <= b for a, v, b in zip(self.lo, x, self.hi))

    def points(self) -> Iterator[Point]:
        """Lattice points in lexicographic order."""
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def points_array(self) -> np.ndarray:
        grids = np.meshgrid(*(np.arange(a, b + 1, dtype=np.int64) for a, b in zip(self.lo, self.hi)),
                            indexing="ij")
        return np.stack(grids, axis=-1).reshape(-1, self.dim)

    def intersect(self, other: "Box") -> Optional["Box"]:
        if other.dim != self.dim:
            raise DimensionMismatchError("box dimensions differ")
        lo = tuple(map(max, self.lo, other.lo))
        hi = tuple(map(min, self.hi, other.hi))
        if any(a > b for a, b in zip(lo, hi)):
            return None
        return Box(lo, hi)

    def shrink(self, r: int) -> Optional["Box"]:
        lo = tuple(a + r for a in self.lo)
        hi = tuple(b - r for b in self.hi)
        if any(a > b for a, b in zip(lo, hi)):
            return None
        return Box(lo, hi)

    def scaled(self, alpha: int) -> "Box":
        return Box(tuple(a * alpha for a in self.lo), tuple(b * alpha for b in self.hi))

    def to_dict(self) -> dict:
        return {"lo": list(self.lo), "hi": list(self.hi)}


# ---------------------------------------------------------------------------
# lattice functions


class LatticeFunction:
    """Evaluation oracle ``Z^n -> R u {+inf}``.

    Parameters
    ----------
    dim : int
        Ambient dimension.
    evaluator : callable
        Maps a point (tuple of ints) inside the universe to a value.
    universe : Box or None
        Points outside evaluate to ``+inf`` without calling ``evaluator``.
        ``None`` means the evaluator is consulted everywhere.
    tag : str
        Family name, informational.
    batch : callable, optional
        Vectorized evaluator on an ``(N, n)`` int array of points inside
        the universe; used by the brute-force verifiers when present.
    """

    def __init__(self, dim: int, evaluator: Callable[[Point], object], universe: Optional[Box] = None,
                 tag: str = "custom", batch: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                 meta: Optional[dict] = None):
        if universe is not None and universe.dim != dim:
            raise DimensionMismatchError("universe dimension does not match the function")
        self.dim = dim
        self.universe = universe
        self.tag = tag
        self.meta = dict(meta or {})
        self._evaluator = evaluator
        self._batch = batch

    def __repr__(self):
        return f"LatticeFunction(dim={self.dim}, tag={self.tag!r}, universe={self.universe})"

    def __call__(self, x):
        x = as_point(x)
        if len(x) != self.dim:
            raise DimensionMismatchError(f"point of dimension {len(x)} given to a {self.dim}-dim function")
        if self.universe is not None and x not in self.universe:
            return INF
        return check_value(self._evaluator(x))

    evaluate = __call__

    def values(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at each row of ``points``.

        Returns a float64 array, or an object array when some value is a
        :class:`~fractions.Fraction` (exact mode).
        """
        points = np.asarray(points, dtype=np.int64).reshape(-1, self.dim)
        if self._batch is not None:
            inside = np.ones(len(points), dtype=bool)
            if self.universe is not None:
                inside = np.all((points >= self.universe.lo) & (points <= self.universe.hi), axis=1)
            out = np.full(len(points), INF)
            if inside.any():
                vals = np.asarray(self._batch(points[inside]), dtype=float)
                if np.isnan(vals).any() or (vals == -INF).any():
                    raise ValueError("batch evaluator produced NaN or -inf")
                out[inside] = vals
            return out
        vals = [self(tuple(int(c) for c in p)) for p in points]
        if any(isinstance(v, Fraction) for v in vals):
            arr = np.empty(len(vals), dtype=object)
            arr[:] = vals
            return arr
        return np.asarray(vals, dtype=float)

    def cached(self) -> "LatticeFunction":
        """Memoized copy (``functools.lru_cache`` is thread-safe)."""
        ev = functools.lru_cache(maxsize=None)(self._evaluator)
        return LatticeFunction(self.dim, ev, self.universe, self.tag, self._batch, self.meta)

    def domain_points(self, box: Optional[Box] = None) -> list:
        """Finite points of ``f`` inside ``box`` (default: the universe)."""
        box = box or self.universe
        if box is None:
            raise UnboundedDomainError("function has no bounding universe")
        return [x for x in box.points() if self(x) != INF]


# ---------------------------------------------------------------------------
# univariate convex pieces


class UnivariateConvex:
    """A univariate discrete convex function, closed-form or tabulated.

    Use the classmethod constructors.  Closed forms accept an optional
    ``domain=(lo, hi)`` (inclusive, +inf outside); tables are finite exactly
    on ``[lo, lo + len(values) - 1]``.  Closed forms also evaluate at real
    arguments, which the continuous module relies on.
    """

    KINDS = ("affine", "abs", "square", "quadratic", "affine_max", "table")

    def __init__(self, kind: str, params: dict, domain=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown piece kind {kind!r}")
        self.kind = kind
        self.params = params
        if domain is not None:
            lo, hi = domain
            if lo is not None and hi is not None and lo > hi:
                raise ValueError("empty piece domain")
        self.domain = domain

    # constructors -----------------------------------------------------
    @classmethod
    def affine(cls, slope=0, intercept=0, domain=None):
        return cls("affine", {"slope": slope, "intercept": intercept}, domain)

    @classmethod
    def abs(cls, a=0, w=1, domain=None):
        if w < 0:
            raise ValueError("abs piece needs a nonnegative weight")
        return cls("abs", {"a": a, "w": w}, domain)

    @classmethod
    def square(cls, a=0, w=1, domain=None):
        if w < 0:
            raise ValueError("square piece needs a nonnegative weight")
        return cls("square", {"a": a, "w": w}, domain)

    @classmethod
    def quadratic(cls, a2, a1=0, a0=0, domain=None):
        """``a2 t^2 + a1 t + a0`` with ``a2 >= 0``."""
        if a2 < 0:
            raise ValueError("quadratic piece needs a nonnegative leading coefficient")
        return cls("quadratic", {"a2": a2, "a1": a1, "a0": a0}, domain)

    @classmethod
    def affine_max(cls, lines: Sequence[Tuple[Real, Real]], domain=None):
        lines = [tuple(l) for l in lines]
        if not lines:
            raise ValueError("affine_max needs at least one line")
        return cls("affine_max", {"lines": lines}, domain)

    @classmethod
    def table(cls, lo: int, values: Sequence):
        values = [check_value(v) for v in values]
        if not values:
            raise ValueError("empty univariate table")
        if any(v == INF for v in values):
            raise ValueError("table values must be finite; the table is +inf outside its range")
        for k in range(1, len(values) - 1):
            if values[k - 1] + values[k + 1] < 2 * values[k]:
                raise NonConvexPieceError(k, lo + k)
        return cls("table", {"lo": int(lo), "values": values}, (int(lo), int(lo) + len(values) - 1))

    # evaluation -------------------------------------------------------
    def finite_interval(self):
        """``(lo, hi)`` of the finite part; ``None`` entries mean unbounded."""
        if self.domain is None:
            return (None, None)
        return self.domain

    @property
    def bounded(self) -> bool:
        lo, hi = self.finite_interval()
        return lo is not None and hi is not None

    def __call__(self, t):
        if self.domain is not None:
            lo, hi = self.domain
            if (lo is not None and t < lo) or (hi is not None and t > hi):
                return INF
        p = self.params
        k = self.kind
        if k == "affine":
            return p["slope"] * t + p["intercept"]
        if k == "abs":
            return p["w"] * abs(t - p["a"])
        if k == "square":
            return p["w"] * (t - p["a"]) ** 2
        if k == "quadratic":
            return p["a2"] * t * t + p["a1"] * t + p["a0"]
        if k == "affine_max":
            return max(s * t + b for s, b in p["lines"])
        idx = t - p["lo"]
        if idx != int(idx):
            raise ValueError("table pieces are only defined at integers")
        return p["values"][int(idx)]

    def batch(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t)
        p = self.params
        k = self.kind
        if k == "affine":
            out = p["slope"] * t + p["intercept"]
        elif k == "abs":
            out = p["w"] * np.abs(t - p["a"])
        elif k == "square":
            out = p["w"] * (t - p["a"]) ** 2
        elif k == "quadratic":
            out = p["a2"] * t * t + p["a1"] * t + p["a0"]
        elif k == "affine_max":
            out = np.max([s * t + b for s, b in p["lines"]], axis=0)
        else:
            vals = np.asarray(p["values"], dtype=float)
            idx = np.clip(t - p["lo"], 0, len(vals) - 1).astype(np.int64)
            out = vals[idx]
        out = np.asarray(out, dtype=float)
        if self.domain is not None:
            lo, hi = self.domain
            mask = np.zeros(t.shape, dtype=bool)
            if lo is not None:
                mask |= t < lo
            if hi is not None:
                mask |= t > hi
            out = np.where(mask, INF, out)
        return out

    def is_exact(self) -> bool:
        """True when every parameter is an int or Fraction."""
        vals = []
        for v in self.params.values():
            if isinstance(v, list):
                for item in v:
                    vals.extend(item if isinstance(item, tuple) else (item,))
            else:
                vals.append(v)
        return all(isinstance(v, (int, Fraction)) for v in vals)

    def to_dict(self) -> dict:
        d = {"kind": self.kind}
        for key, v in self.params.items():
            d[key] = [list(l) for l in v] if key == "lines" else v
        if self.domain is not None and self.kind != "table":
            d["domain"] = list(self.domain)
        return d

    def __repr__(self):
        return f"UnivariateConvex({self.kind}, {self.params}, domain={self.domain})"


# ---------------------------------------------------------------------------
# quadratics and 2-separable specs


@dataclass(frozen=True)
class QuadraticSpec:
    """``f(x) = x^T Q x + c^T x`` with a symmetric ``Q``."""

    Q: np.ndarray
    c: Optional[np.ndarray] = None

    def __post_init__(self):
        Q = np.array(self.Q, dtype=float)
        if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
            raise ValueError("Q must be a square matrix")
        if not np.array_equal(Q, Q.T):
            raise ValueError("Q must be symmetric")
        if not np.all(np.isfinite(Q)):
            raise ValueError("Q must be finite")
        c = np.zeros(len(Q)) if self.c is None else np.array(self.c, dtype=float).reshape(-1)
        if c.shape != (len(Q),) or not np.all(np.isfinite(c)):
            raise ValueError("c must be a finite vector matching Q")
        Q.setflags(write=False)
        c.setflags(write=False)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return len(self.Q)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return float(x @ self.Q @ x + self.c @ x)

    def batch(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        return np.einsum("ij,jk,ik->i", X, self.Q, X) + X @ self.c


@dataclass
class DiagonalDominance:
    """Outcome of the row test ``q_ii >= sum_{j != i} |q_ij|``; truthy iff it holds."""

    holds: bool
    slack: Tuple[float, ...]

    def __bool__(self):
        return self.holds

    @property
    def first_violation(self) -> Optional[int]:
        for i, s in enumerate(self.slack):
            if s < 0:
                return i
        return None


def quadratic_is_diag_dominant(q: QuadraticSpec) -> DiagonalDominance:
    Q = q.Q
    off = np.abs(Q).sum(axis=1) - np.abs(np.diag(Q))
    slack = tuple(float(v) for v in np.diag(Q) - off)
    return DiagonalDominance(all(s >= 0 for s in slack), slack)


@dataclass
class TwoSeparableSpec:
    """``sum_i xi_i(x_i) + sum_{i!=j} phi_ij(x_i - x_j) + sum_{i!=j} psi_ij(x_i + x_j)``.

    Missing entries are identically zero.  Index pairs are ordered and 0-based.
    """

    n: int
    xi: Dict[int, UnivariateConvex] = field(default_factory=dict)
    phi: Dict[Tuple[int, int], UnivariateConvex] = field(default_factory=dict)
    psi: Dict[Tuple[int, int], UnivariateConvex] = field(default_factory=dict)

    def __post_init__(self):
        for i in self.xi:
            if not 0 <= i < self.n:
                raise ValueError(f"xi index {i} out of range")
        for name, table in (("phi", self.phi), ("psi", self.psi)):
            for (i, j) in table:
                if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                    raise ValueError(f"{name} index pair {(i, j)} is invalid")

    def __call__(self, x):
        total = 0
        for i, g in self.xi.items():
            total = total + g(x[i])
        for (i, j), g in self.phi.items():
            total = total + g(x[i] - x[j])
        for (i, j), g in self.psi.items():
            total = total + g(x[i] + x[j])
        return total

    def batch(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X)
        total = np.zeros(len(X))
        for i, g in self.xi.items():
            total = total + g.batch(X[:, i])
        for (i, j), g in self.phi.items():
            total = total + g.batch(X[:, i] - X[:, j])
        for (i, j), g in self.psi.items():
            total = total + g.batch(X[:, i] + X[:, j])
        return total

    def pieces(self):
        yield from self.xi.values()
        yield from self.phi.values()
        yield from self.psi.values()


def quadratic_to_two_separable(q: QuadraticSpec) -> TwoSeparableSpec:
    """Rewrite a diagonally dominant quadratic as a 2-separable convex function.

    ``xi_i(t) = (q_ii - sum_{j!=i}|q_ij|) t^2 + c_i t``,
    ``psi_ij(t) = q_ij^+ t^2 / 2`` and ``phi_ij(t) = q_ij^- t^2 / 2``.
    """
    dd = quadratic_is_diag_dominant(q)
    if not dd:
        row = dd.first_violation
        raise NotDiagonallyDominantError(row, dd.slack[row])
    n = q.n
    Q = q.Q
    xi = {i: UnivariateConvex.quadratic(_num(dd.slack[i]), _num(q.c[i])) for i in range(n)}
    phi, psi = {}, {}
    for i in range(n):
        for j in range(n):
            if i == j or Q[i, j] == 0:
                continue
            if Q[i, j] > 0:
                psi[(i, j)] = UnivariateConvex.square(0, _num(Q[i, j] / 2))
            else:
                phi[(i, j)] = UnivariateConvex.square(0, _num(-Q[i, j] / 2))
    return TwoSeparableSpec(n, xi, phi, psi)


def _num(v):
    """Plain Python number, int when integral."""
    v = float(v)
    return int(v) if v.is_integer() else v


# ---------------------------------------------------------------------------
# concrete families


def table_function(values: Mapping, box: Optional[Box] = None, sparse: bool = True) -> LatticeFunction:
    """Tabulated function: ``values`` maps points to values, +inf elsewhere.

    With ``sparse=False`` every point of ``box`` must be listed.
    """
    table = {as_point(k): check_value(v) for k, v in values.items()}
    if box is None:
        box = Box.bounding(table)
    for k in table:
        if k not in box:
            raise ValueError(f"table point {k} outside box")
    if not sparse:
        missing = [p for p in box.points() if p not in table]
        if missing:
            raise ValueError(f"dense table is missing point {missing[0]}")
    return LatticeFunction(box.dim, lambda x: table.get(x, INF), box, "table", meta={"table": table})


def indicator(points: Iterable[Sequence[int]], box: Optional[Box] = None) -> LatticeFunction:
    """``delta_S``: 0 on ``S`` and +inf elsewhere."""
    pts = frozenset(as_point(p) for p in points)
    if box is None:
        box = Box.bounding(pts)
    return LatticeFunction(box.dim, lambda x: 0 if x in pts else INF, box, "indicator",
                           meta={"points": pts})


def quadratic_function(q: QuadraticSpec, box: Box) -> LatticeFunction:
    return LatticeFunction(q.n, q, box, "quadratic", batch=q.batch, meta={"spec": q})


def separable_function(pieces: Sequence[UnivariateConvex], box: Optional[Box] = None) -> LatticeFunction:
    """``sum_i phi_i(x_i)``; the universe defaults to the pieces' finite intervals."""
    pieces = list(pieces)
    if box is None:
        ivs = [p.finite_interval() for p in pieces]
        if any(lo is None or hi is None for lo, hi in ivs):
            raise UnboundedDomainError("separable function with unbounded pieces needs an explicit box")
        box = Box(tuple(int(lo) for lo, _ in ivs), tuple(int(hi) for _, hi in ivs))

    def ev(x):
        return sum((g(t) for g, t in zip(pieces, x)), 0)

    def batch(X):
        return sum(g.batch(X[:, i]) for i, g in enumerate(pieces))

    exact = all(p.is_exact() for p in pieces)
    return LatticeFunction(len(pieces), ev, box, "separable", None if exact else batch,
                           meta={"pieces": pieces})


def two_separable_function(spec: TwoSeparableSpec, box: Box) -> LatticeFunction:
    exact = all(p.is_exact() for p in spec.pieces())
    return LatticeFunction(spec.n, spec, box, "two_separable", None if exact else spec.batch,
                           meta={"spec": spec})


# ---------------------------------------------------------------------------
# operations


def transform(f: LatticeFunction, kind: str, param) -> LatticeFunction:
    """Translate, permute, sign-flip or scale the argument of ``f``.

    ``translate d``: ``g(x) = f(x + d)``; ``permute sigma`` (0-based):
    ``g(x) = f(x[sigma[0]], ..., x[sigma[n-1]])``; ``sign_flip tau``:
    ``g(x) = f(tau * x)``; ``scale alpha``: ``g(x) = f(alpha x)``.
    """
    n = f.dim
    U = f.universe
    if kind == "translate":
        d = as_point(param)
        _check_dim(d, n)
        ev = lambda x: f(tuple(a + b for a, b in zip(x, d)))
        box = None if U is None else Box(tuple(a - b for a, b in zip(U.lo, d)),
                                         tuple(a - b for a, b in zip(U.hi, d)))
    elif kind == "permute":
        sigma = tuple(int(s) for s in param)
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"{sigma} is not a permutation of 0..{n - 1}")
        ev = lambda x: f(tuple(x[s] for s in sigma))
        box = None
        if U is not None:
            lo, hi = [0] * n, [0] * n
            for i, s in enumerate(sigma):
                lo[s], hi[s] = U.lo[i], U.hi[i]
            box = Box(tuple(lo), tuple(hi))
    elif kind == "sign_flip":
        tau = as_point(param)
        _check_dim(tau, n)
        if any(t not in (1, -1) for t in tau):
            raise ValueError("sign vector entries must be +1 or -1")
        ev = lambda x: f(tuple(t * a for t, a in zip(tau, x)))
        box = None if U is None else Box(
            tuple(a if t == 1 else -b for t, a, b in zip(tau, U.lo, U.hi)),
            tuple(b if t == 1 else -a for t, a, b in zip(tau, U.lo, U.hi)))
    elif kind == "scale":
        alpha = int(param)
        if alpha != param or alpha <= 0:
            raise ValueError("scaling factor must be a positive integer")
        ev = lambda x: f(tuple(alpha * a for a in x))
        box = None
        if U is not None:
            lo = tuple(-((-a) // alpha) for a in U.lo)
            hi = tuple(b // alpha for b in U.hi)
            if any(a > b for a, b in zip(lo, hi)):
                raise ValueError("scaled universe contains no lattice point")
            box = Box(lo, hi)
    else:
        raise ValueError(f"unknown transform {kind!r}")
    return LatticeFunction(n, ev, box, f"{kind}({f.tag})")


def _check_dim(x, n):
    if len(x) != n:
        raise DimensionMismatchError(f"expected dimension {n}, got {len(x)}")


def nonneg_sum(f1: LatticeFunction, f2: LatticeFunction, a1=1, a2=1) -> LatticeFunction:
    """``a1 f1 + a2 f2`` with ``a1, a2 >= 0`` (``0 * inf`` counts as ``+inf``)."""
    if a1 < 0 or a2 < 0:
        raise ValueError("coefficients must be nonnegative")
    if f1.dim != f2.dim:
        raise DimensionMismatchError("summands have different dimensions")
    if f1.universe is None:
        box = f2.universe
    elif f2.universe is None:
        box = f1.universe
    else:
        box = f1.universe.intersect(f2.universe)
        if box is None:
            raise ValueError("summand universes do not intersect")

    def ev(x):
        v1, v2 = f1(x), f2(x)
        if v1 == INF or v2 == INF:
            return INF
        return a1 * v1 + a2 * v2

    return LatticeFunction(f1.dim, ev, box, "nonneg_sum")


def direct_sum(f1: LatticeFunction, f2: LatticeFunction) -> LatticeFunction:
    """``(f1 (+) f2)(x, y) = f1(x) + f2(y)``."""
    n1, n2 = f1.dim, f2.dim
    box = None
    if f1.universe is not None and f2.universe is not None:
        box = Box(f1.universe.lo + f2.universe.lo, f1.universe.hi + f2.universe.hi)

    def ev(x):
        v1 = f1(x[:n1])
        if v1 == INF:
            return INF
        v2 = f2(x[n1:])
        return INF if v2 == INF else v1 + v2

    return LatticeFunction(n1 + n2, ev, box, "direct_sum")


def combine(f1: LatticeFunction, f2: LatticeFunction, kind: str, a1=1, a2=1) -> LatticeFunction:
    if kind == "nonneg_sum":
        return nonneg_sum(f1, f2, a1, a2)
    if kind == "direct_sum":
        return direct_sum(f1, f2)
    raise ValueError(f"unknown combination {kind!r}")


def restrict(f: LatticeFunction, fixed: Mapping[int, int]) -> LatticeFunction:
    """Fix the coordinates in ``fixed`` (index -> value); the rest stay free."""
    fixed = {int(i): int(v) for i, v in fixed.items()}
    if any(not 0 <= i < f.dim for i in fixed):
        raise ValueError("restricted coordinate out of range")
    free = [i for i in range(f.dim) if i not in fixed]
    if not free:
        raise ValueError("restriction must keep at least one coordinate")

    def ev(x):
        full = [0] * f.dim
        for i, v in fixed.items():
            full[i] = v
        for i, v in zip(free, x):
            full[i] = v
        return f(tuple(full))

    box = None
    if f.universe is not None:
        box = Box(tuple(f.universe.lo[i] for i in free), tuple(f.universe.hi[i] for i in free))
    return LatticeFunction(len(free), ev, box, "restrict")


def project(f: LatticeFunction, keep_dims: Sequence[int]) -> LatticeFunction:
    """``g(x) = min_y f(x, y)`` over the eliminated coordinates inside the universe."""
    keep = [int(i) for i in keep_dims]
    if len(set(keep)) != len(keep) or any(not 0 <= i < f.dim for i in keep) or not keep:
        raise ValueError("keep_dims must be distinct valid coordinates")
    if f.universe is None:
        raise UnboundedDomainError("projection needs a bounded universe in the eliminated coordinates")
    elim = [i for i in range(f.dim) if i not in keep]
    U = f.universe
    ranges = [range(U.lo[i], U.hi[i] + 1) for i in elim]

    def ev(x):
        full = [0] * f.dim
        for i, v in zip(keep, x):
            full[i] = v
        best = INF
        for y in itertools.product(*ranges):
            for i, v in zip(elim, y):
                full[i] = v
            val = f(tuple(full))
            if val < best:
                best = val
        return best

    box = Box(tuple(U.lo[i] for i in keep), tuple(U.hi[i] for i in keep))
    return LatticeFunction(len(keep), ev, box, "project")


def infconv(f1: LatticeFunction, f2: LatticeFunction) -> LatticeFunction:
    """Infimal convolution ``min {f1(y) + f2(z) : y + z = x}`` of two bounded functions."""
    if f1.dim != f2.dim:
        raise DimensionMismatchError("convolution operands have different dimensions")
    if f1.universe is None or f2.universe is None:
        raise UnboundedDomainError("convolution needs bounded universes")
    dom1 = [(y, f1(y)) for y in f1.domain_points()]
    U1, U2 = f1.universe, f2.universe
    box = Box(tuple(a + b for a, b in zip(U1.lo, U2.lo)), tuple(a + b for a, b in zip(U1.hi, U2.hi)))

    def ev(x):
        best = INF
        for y, v in dom1:
            w = f2(tuple(a - b for a, b in zip(x, y)))
            if w != INF and v + w < best:
                best = v + w
        return best

    return LatticeFunction(f1.dim, ev, box, "infconv")


def infconv_separable(f: LatticeFunction, phi: Sequence[UnivariateConvex]) -> LatticeFunction:
    """Convolution of ``f`` with the separable convex ``sum_i phi_i(x_i)``."""
    phi = list(phi)
    if len(phi) != f.dim:
        raise DimensionMismatchError("need one univariate piece per coordinate")
    if not all(p.bounded for p in phi):
        raise UnboundedDomainError("separable pieces must have bounded finite parts")
    return infconv(f, separable_function(phi))
