"""Integer-lattice primitives.

Points are plain tuples of Python ints.  The directed midpoint operator
``mu(x, y)`` rounds ``(x + y) / 2`` componentwise towards ``x``; together
with ``mu(y, x)`` it splits ``x + y`` into two points at l-inf distance at
most one.  All rounding goes through integer floor division, so negative
coordinates are handled bit-exactly.

Coordinate indices are 0-based throughout (``A_k = {0, 1}`` means the first
two coordinates).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import DimensionMismatchError, EmptyDecompositionError

Point = Tuple[int, ...]
DirectionMultiset = Tuple[Point, ...]


def as_point(x: Sequence[int]) -> Point:
    """Coerce a sequence to a lattice point, rejecting non-integers."""
    out = []
    for v in x:
        iv = int(v)
        if iv != v:
            raise ValueError(f"non-integer coordinate {v!r}")
        out.append(iv)
    if not out:
        raise ValueError("lattice points need at least one coordinate")
    return tuple(out)


def _pair(x, y):
    x, y = as_point(x), as_point(y)
    if len(x) != len(y):
        raise DimensionMismatchError(f"dimensions differ: {len(x)} vs {len(y)}")
    return x, y


def ceil_half(a: int) -> int:
    return -((-a) // 2)


def floor_half(a: int) -> int:
    return a // 2


def directed_midpoint_pair(x, y) -> Tuple[Point, Point]:
    """Return ``(mu(x, y), mu(y, x))``.

    ``mu(x, y)_i`` is ``ceil((x_i + y_i) / 2)`` when ``x_i >= y_i`` and
    ``floor((x_i + y_i) / 2)`` otherwise.
    """
    x, y = _pair(x, y)
    p = tuple(ceil_half(a + b) if a >= b else floor_half(a + b) for a, b in zip(x, y))
    q = tuple(a + b - c for a, b, c in zip(x, y, p))
    return p, q


def mu(x, y) -> Point:
    return directed_midpoint_pair(x, y)[0]


def rounded_midpoint_pair(x, y) -> Tuple[Point, Point]:
    """Return ``(ceil((x + y) / 2), floor((x + y) / 2))`` componentwise."""
    x, y = _pair(x, y)
    return (tuple(ceil_half(a + b) for a, b in zip(x, y)),
            tuple(floor_half(a + b) for a, b in zip(x, y)))


def chebyshev_distance(x, y) -> int:
    x, y = _pair(x, y)
    return max(abs(a - b) for a, b in zip(x, y))


def is_midpoint_pair(x, y, p, q) -> bool:
    """Test the three-condition characterization of ``(mu(x,y), mu(y,x))``.

    (a) ``p + q == x + y``; (b) ``||p - q||_inf <= 1``; (c) ``p_i >= q_i``
    wherever ``x_i >= y_i`` and ``p_i <= q_i`` elsewhere.
    """
    x, y = _pair(x, y)
    p, q = _pair(p, q)
    if len(p) != len(x):
        raise DimensionMismatchError("midpoint candidates have the wrong dimension")
    if any(a + b != c + d for a, b, c, d in zip(x, y, p, q)):
        return False
    if any(abs(c - d) > 1 for c, d in zip(p, q)):
        return False
    return all((c >= d) if a >= b else (c <= d) for a, b, c, d in zip(x, y, p, q))


@dataclass(frozen=True)
class LevelSetPair:
    """Coordinates where ``y - x`` reaches ``+k`` (``A``) or ``-k`` (``B``)."""

    k: int
    A: frozenset
    B: frozenset

    def direction(self, n: int) -> Point:
        return tuple(1 if i in self.A else (-1 if i in self.B else 0) for i in range(n))


def level_set_decomposition(x, y) -> Tuple[LevelSetPair, ...]:
    """Nested level sets ``A_k = {i : y_i - x_i >= k}``, ``B_k = {i : y_i - x_i <= -k}``.

    Returned for ``k = 1 .. m`` with ``m = ||y - x||_inf``, so that
    ``y - x == sum_k (1_{A_k} - 1_{B_k})``.
    """
    x, y = _pair(x, y)
    d = [b - a for a, b in zip(x, y)]
    m = max(abs(v) for v in d)
    if m == 0:
        raise EmptyDecompositionError("x == y has no level-set decomposition")
    return tuple(
        LevelSetPair(k,
                     frozenset(i for i, v in enumerate(d) if v >= k),
                     frozenset(i for i, v in enumerate(d) if v <= -k))
        for k in range(1, m + 1)
    )


def midpoint_decompose(x) -> DirectionMultiset:
    """Recursively split ``x`` into {-1, 0, +1} directions using ``mu`` against 0.

    ``D(0)`` is empty, ``D(x) = {x}`` at norm 1, ``{mu(x,0), mu(0,x)}`` at
    norm 2 and ``D(mu(x,0)) + D(mu(0,x))`` beyond.  The result is returned
    as a sorted tuple so that multisets compare with ``==``.
    """
    x = as_point(x)
    zero = (0,) * len(x)
    out = []
    stack = [x]
    while stack:
        v = stack.pop()
        norm = max(abs(c) for c in v)
        if norm == 0:
            continue
        if norm == 1:
            out.append(v)
            continue
        a, b = directed_midpoint_pair(v, zero)
        if norm == 2:
            out.extend((a, b))
        else:
            stack.extend((a, b))
    return tuple(sorted(out))


def level_set_directions(x, y) -> DirectionMultiset:
    """The multiset ``{1_{A_k} - 1_{B_k}}`` as a sorted tuple (empty when x == y)."""
    x, y = _pair(x, y)
    if x == y:
        return ()
    n = len(x)
    return tuple(sorted(ls.direction(n) for ls in level_set_decomposition(x, y)))


def add(x, y) -> Point:
    x, y = _pair(x, y)
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y) -> Point:
    x, y = _pair(x, y)
    return tuple(a - b for a, b in zip(x, y))


def sign_flip(tau, x) -> Point:
    tau, x = _pair(tau, x)
    return tuple(t * a for t, a in zip(tau, x))


# numpy counterparts used by the brute-force verifiers; rows are points.

def mu_arrays(X: np.ndarray, Y: np.ndarray):
    s = X + Y
    up = -((-s) // 2)
    down = s // 2
    return np.where(X >= Y, up, down), np.where(Y >= X, up, down)


def rounded_midpoint_arrays(X: np.ndarray, Y: np.ndarray):
    s = X + Y
    return -((-s) // 2), s // 2


def level_direction_array(D: np.ndarray, k: int) -> np.ndarray:
    """Rows ``1_{A_k} - 1_{B_k}`` for displacement rows ``D = y - x``."""
    return (D >= k).astype(D.dtype) - (D <= -k).astype(D.dtype)
