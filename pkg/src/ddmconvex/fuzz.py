"""Seeded random instance generators.

Every generator takes a :class:`numpy.random.Generator` and returns a JSON
spec dict, so that instances can be logged, replayed and fed to the CLI.
"""
from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .classify import classify, is_ddm_convex
from .functions import quadratic_is_diag_dominant
from .spec_io import parse_function_spec

FAMILIES = ("table", "quadratic", "2sep")


def _quarter(rng, lo, hi):
    return float(rng.integers(int(4 * lo), int(4 * hi) + 1)) / 4


def random_table_spec(rng, max_dim=3, max_side=3, hole=0.2, vmax=9) -> dict:
    """Table on ``[0, h_1] x ... x [0, h_n]`` with values in ``0..vmax`` and random holes."""
    n = int(rng.integers(1, max_dim + 1))
    hi = [int(rng.integers(1, max_side + 1)) for _ in range(n)]
    pts = list(np.ndindex(*[h + 1 for h in hi]))
    vals = rng.integers(0, vmax + 1, size=len(pts))
    keep = rng.random(len(pts)) >= hole
    if not keep.any():
        keep[int(rng.integers(len(pts)))] = True
    return {"dim": n, "family": "table", "box": {"lo": [0] * n, "hi": hi}, "sparse": True,
            "values": [{"x": [int(c) for c in p], "v": int(v)} for p, v, k in zip(pts, vals, keep) if k]}


def random_symmetric_q(rng, n, near_boundary=None) -> list:
    """Symmetric quarter-integer matrix with entries in [-3, 3].

    Half of the draws (or all, with ``near_boundary=True``) place the
    diagonal at the row's off-diagonal absolute sum plus a small offset in
    ``[-1/2, 1/2]``, where diagonal dominance is decided by a hair.
    """
    Q = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            Q[i, j] = Q[j, i] = _quarter(rng, -3, 3)
    if near_boundary is None:
        near_boundary = bool(rng.random() < 0.5)
    for i in range(n):
        if near_boundary:
            off = np.abs(Q[i]).sum() - abs(Q[i, i])
            Q[i, i] = min(3.0, max(-3.0, off + _quarter(rng, -0.5, 0.5)))
        else:
            Q[i, i] = _quarter(rng, -3, 3)
    return Q.tolist()


def random_dd_quadratic_spec(rng, n=2, side=3, slack_max=2.0, linear=True) -> dict:
    """Diagonally dominant quadratic: random off-diagonals, diagonal = row sum + slack."""
    Q = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            Q[i, j] = Q[j, i] = _quarter(rng, -2, 2)
    for i in range(n):
        Q[i, i] = np.abs(Q[i]).sum() + _quarter(rng, 0, slack_max)
    c = [_quarter(rng, -4, 4) if linear else 0.0 for _ in range(n)]
    return {"dim": n, "family": "quadratic", "Q": Q.tolist(), "c": c,
            "box": {"lo": [-side] * n, "hi": [side] * n}}


def random_piece(rng, allow_table=True) -> dict:
    kinds = ["abs", "square", "affine_max"] + (["table"] if allow_table else [])
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == "abs":
        return {"kind": "abs", "a": _quarter(rng, -2, 2), "w": _quarter(rng, 0.25, 2)}
    if kind == "square":
        return {"kind": "square", "a": _quarter(rng, -2, 2), "w": _quarter(rng, 0.25, 1)}
    if kind == "affine_max":
        k = int(rng.integers(1, 4))
        return {"kind": "affine_max", "lines": [[_quarter(rng, -2, 2), _quarter(rng, -2, 2)] for _ in range(k)]}
    return random_convex_table(rng)


def random_convex_table(rng, lo=-8, length=17) -> dict:
    """Convex univariate table: nondecreasing integer slopes, summed."""
    slopes = np.sort(rng.integers(-4, 5, size=length - 1))
    vals = np.concatenate([[0], np.cumsum(slopes)])
    vals = vals - vals.min()
    return {"kind": "table", "lo": lo, "values": [int(v) for v in vals]}


def random_two_separable_spec(rng, n=2, side=3, density=0.6, continuous=False) -> dict:
    xi, phi, psi = {}, {}, {}
    for i in range(n):
        if rng.random() < density:
            xi[str(i)] = random_piece(rng, not continuous)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rng.random() < density / 2:
                phi[f"{i},{j}"] = random_piece(rng, not continuous)
            if rng.random() < density / 2:
                psi[f"{i},{j}"] = random_piece(rng, not continuous)
    spec = {"dim": n, "family": "two_separable", "box": {"lo": [-side] * n, "hi": [side] * n},
            "xi": xi, "phi": phi, "psi": psi}
    if continuous:
        spec["continuous"] = True
    return spec


def random_separable_table_spec(rng, n, length=3) -> dict:
    """Separable convex function with bounded table pieces (a convolution partner)."""
    pieces = []
    for _ in range(n):
        lo = int(rng.integers(-1, 1))
        slopes = np.sort(rng.integers(-3, 4, size=length - 1))
        vals = np.concatenate([[0], np.cumsum(slopes)])
        pieces.append({"kind": "table", "lo": lo, "values": [int(v - vals.min()) for v in vals]})
    return {"dim": n, "family": "separable", "pieces": pieces}


def _fraction_free(obj):
    if isinstance(obj, Fraction):
        return float(obj)
    return obj


def fuzz(seed: int, count: int, family: str = "table") -> dict:
    """Generate ``count`` instances and classify each; byte-stable for a given seed."""
    if family not in FAMILIES:
        raise ValueError(f"unknown fuzz family {family!r}")
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        if family == "table":
            spec = random_table_spec(rng)
            f = parse_function_spec(spec)
            rep = classify(f)
            rec = {"verdicts": {name: v.holds for name, v in rep.verdicts.items()},
                   "implication_violations": rep.implication_violations()}
        elif family == "quadratic":
            n = int(rng.integers(2, 4))
            spec = {"dim": n, "family": "quadratic", "Q": random_symmetric_q(rng, n), "c": [0.0] * n,
                    "box": {"lo": [-3] * n, "hi": [3] * n}}
            f = parse_function_spec(spec)
            d = is_ddm_convex(f)
            dd = quadratic_is_diag_dominant(f.meta["spec"])
            rec = {"DDM": d.holds, "diag_dominant": dd.holds, "agree": d.holds == dd.holds}
        else:
            spec = random_two_separable_spec(rng, n=int(rng.integers(2, 4)), side=2)
            d = is_ddm_convex(parse_function_spec(spec))
            rec = {"DDM": d.holds}
        out.append({"index": k, "spec": spec, **rec})
    return {"seed": seed, "family": family, "count": count, "instances": out}


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, default=_fraction_free)
