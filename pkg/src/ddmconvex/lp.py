"""Dense two-phase primal simplex in exact rational arithmetic.

Only meant for the tiny equality-form programs behind the local convex
envelope (a handful of rows, at most ``2**n`` columns).  Bland's rule is
used for both entering and leaving variables, so the method cannot cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import LPError


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Optional[Fraction] = None
    x: Optional[List[Fraction]] = None


def _pivot(T, basis, r, c):
    piv = T[r][c]
    row = [v / piv for v in T[r]]
    T[r] = row
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            factor = other[c]
            T[i] = [a - factor * b for a, b in zip(other, row)]
    basis[r] = c


def _run(T, basis, cost_row, allowed):
    """Iterate Bland pivots on tableau ``T`` whose last row is the cost row."""
    m = len(T) - 1
    for _ in range(10_000):
        enter = next((j for j in allowed if T[cost_row][j] < 0), None)
        if enter is None:
            return "optimal"
        best, leave = None, None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return "unbounded"
        _pivot(T, basis, leave, enter)
    raise LPError("simplex iteration limit reached")


def simplex_eq(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize ``c @ x`` subject to ``A @ x == b`` and ``x >= 0``.

    All inputs are converted to :class:`~fractions.Fraction` (floats
    exactly), so the returned value and point are exact.
    """
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    m, n = len(A), len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise LPError("inconsistent LP dimensions")
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # phase 1: columns 0..n-1 original, n..n+m-1 artificial
    T = [A[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for i in range(m):
        cost = [u - v for u, v in zip(cost, T[i])]
    T.append(cost)
    basis = list(range(n, n + m))
    if _run(T, basis, m, range(n + m)) != "optimal":
        raise LPError("phase one did not terminate at an optimum")
    if T[m][-1] != 0:
        return LPResult("infeasible")

    # drive artificials out of the basis; drop redundant rows
    r = 0
    while r < len(basis):
        if basis[r] >= n:
            col = next((j for j in range(n) if T[r][j] != 0), None)
            if col is None:
                del T[r]
                del basis[r]
                continue
            _pivot(T, basis, r, col)
        r += 1

    m2 = len(basis)
    T = [row[:n] + [row[-1]] for row in T[:m2]]
    cost = c + [Fraction(0)]
    for i, j in enumerate(basis):
        if cost[j] != 0:
            f = cost[j]
            cost = [u - f * v for u, v in zip(cost, T[i])]
    T.append(cost)
    status = _run(T, basis, m2, range(n))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", value, x)
