"""JSON function specs.

See the README for the full schema.  Numbers may be JSON numbers, the
string ``"inf"`` (table values only) or a rational string such as
``"3/4"``, which is read as an exact :class:`~fractions.Fraction`.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .continuous import ContinuousFunction, RealBox
from .errors import NonConvexPieceError, SpecError
from .functions import (INF, Box, LatticeFunction, QuadraticSpec, TwoSeparableSpec, UnivariateConvex,
                        indicator, quadratic_function, separable_function, table_function,
                        two_separable_function)

LATTICE_FAMILIES = ("table", "quadratic", "two_separable", "indicator", "separable")
CONTINUOUS_FAMILIES = ("quadratic", "two_separable", "simplex_indicator")


def _reject_constant(name):
    raise SpecError("$", f"{name} is not allowed in a function spec")


def loads(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SpecError("$", f"invalid JSON: {exc}") from exc


def _number(v, path, allow_inf=False):
    if isinstance(v, bool):
        raise SpecError(path, "expected a number, got a boolean")
    if isinstance(v, (int, float)):
        return v
    if isinstance(v, str):
        if v in ("inf", "+inf") and allow_inf:
            return INF
        try:
            fr = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise SpecError(path, f"cannot read {v!r} as a number") from None
        return int(fr) if fr.denominator == 1 else fr
    if v is None and allow_inf:
        return INF
    raise SpecError(path, f"expected a number, got {type(v).__name__}")


def _int_list(v, path, n=None):
    if not isinstance(v, list) or not v:
        raise SpecError(path, "expected a nonempty list of integers")
    out = []
    for k, a in enumerate(v):
        if isinstance(a, bool) or not isinstance(a, int):
            raise SpecError(f"{path}[{k}]", "expected an integer")
        out.append(a)
    if n is not None and len(out) != n:
        raise SpecError(path, f"expected {n} entries, got {len(out)}")
    return tuple(out)


def parse_box(d, path="box", n=None) -> Box:
    if isinstance(d, str):
        return parse_box_arg(d, n, path)
    if not isinstance(d, dict) or "lo" not in d or "hi" not in d:
        raise SpecError(path, "a box needs 'lo' and 'hi'")
    lo = _int_list(d["lo"], f"{path}.lo", n)
    hi = _int_list(d["hi"], f"{path}.hi", len(lo))
    try:
        return Box(lo, hi)
    except ValueError as exc:
        raise SpecError(path, str(exc)) from None


def parse_box_arg(text: str, n=None, path="--box") -> Box:
    """``"lo..hi"`` (a cube, needs ``n``) or ``"l1,l2..h1,h2"``."""
    try:
        a, b = text.split("..")
        lo = [int(v) for v in a.split(",")]
        hi = [int(v) for v in b.split(",")]
    except ValueError:
        raise SpecError(path, f"cannot read box {text!r}; use lo..hi or l1,l2..h1,h2") from None
    if len(lo) == 1 and len(hi) == 1 and n is not None:
        lo, hi = lo * n, hi * n
    if n is not None and len(lo) != n:
        raise SpecError(path, f"box has dimension {len(lo)}, function has {n}")
    try:
        return Box(tuple(lo), tuple(hi))
    except ValueError as exc:
        raise SpecError(path, str(exc)) from None


def parse_piece(d, path) -> UnivariateConvex:
    if not isinstance(d, dict) or "kind" not in d:
        raise SpecError(path, "a piece needs a 'kind'")
    kind = d["kind"]
    num = lambda key, default=None: _number(d.get(key, default), f"{path}.{key}")
    domain = None
    if "domain" in d:
        dom = d["domain"]
        if not isinstance(dom, list) or len(dom) != 2:
            raise SpecError(f"{path}.domain", "expected [lo, hi] (null for unbounded)")
        domain = tuple(None if v is None else _number(v, f"{path}.domain") for v in dom)
    try:
        if kind == "abs":
            return UnivariateConvex.abs(num("a", 0), num("w", 1), domain)
        if kind == "square":
            return UnivariateConvex.square(num("a", 0), num("w", 1), domain)
        if kind == "quadratic":
            return UnivariateConvex.quadratic(num("a2"), num("a1", 0), num("a0", 0), domain)
        if kind == "affine":
            return UnivariateConvex.affine(num("slope", 0), num("intercept", 0), domain)
        if kind == "affine_max":
            lines = d.get("lines")
            if not isinstance(lines, list) or not lines:
                raise SpecError(f"{path}.lines", "expected a nonempty list of [slope, intercept]")
            return UnivariateConvex.affine_max(
                [(_number(l[0], f"{path}.lines[{k}]"), _number(l[1], f"{path}.lines[{k}]"))
                 for k, l in enumerate(lines)], domain)
        if kind == "table":
            lo = d.get("lo", 0)
            if isinstance(lo, bool) or not isinstance(lo, int):
                raise SpecError(f"{path}.lo", "expected an integer")
            vals = d.get("values")
            if not isinstance(vals, list):
                raise SpecError(f"{path}.values", "expected a list")
            return UnivariateConvex.table(lo, [_number(v, f"{path}.values[{k}]") for k, v in enumerate(vals)])
    except NonConvexPieceError as exc:
        raise SpecError(f"{path}.values[{exc.index}]",
                        f"table is not discrete convex at index {exc.index} (t={exc.t})") from None
    except SpecError:
        raise
    except (ValueError, TypeError) as exc:
        raise SpecError(path, str(exc)) from None
    raise SpecError(f"{path}.kind", f"unknown piece kind {kind!r}")


def _pair_key(key, path):
    try:
        i, j = (int(v) for v in str(key).split(","))
    except ValueError:
        raise SpecError(path, f"pair key {key!r} must look like 'i,j'") from None
    return i, j


def _two_separable(d, n, path="$") -> TwoSeparableSpec:
    xi, phi, psi = {}, {}, {}
    for key, g in (d.get("xi") or {}).items():
        try:
            xi[int(key)] = parse_piece(g, f"{path}.xi.{key}")
        except ValueError as exc:
            if isinstance(exc, SpecError):
                raise
            raise SpecError(f"{path}.xi", f"bad index {key!r}") from None
    for name, table in (("phi", phi), ("psi", psi)):
        for key, g in (d.get(name) or {}).items():
            table[_pair_key(key, f"{path}.{name}")] = parse_piece(g, f"{path}.{name}.{key}")
    try:
        return TwoSeparableSpec(n, xi, phi, psi)
    except ValueError as exc:
        raise SpecError(path, str(exc)) from None


def _matrix(Q, path, n):
    if not isinstance(Q, list) or len(Q) != n or any(not isinstance(r, list) or len(r) != n for r in Q):
        raise SpecError(path, f"expected an {n}x{n} matrix")
    M = [[float(_number(v, f"{path}[{i}][{j}]")) for j, v in enumerate(r)] for i, r in enumerate(Q)]
    for i in range(n):
        for j in range(i):
            if M[i][j] != M[j][i]:
                raise SpecError(f"{path}[{i}][{j}]", "Q must be symmetric")
    return M


def parse_function_spec(text_or_obj) -> Union[LatticeFunction, ContinuousFunction]:
    """Build an oracle from a JSON spec (text or an already-decoded dict).

    Continuous specs (``"continuous": true``) return a
    :class:`ContinuousFunction` whose ``box`` attribute holds the integer box
    used for discrete checks, if one was given.
    """
    d = loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    if not isinstance(d, dict):
        raise SpecError("$", "a function spec must be a JSON object")
    family = d.get("family")
    continuous = d.get("continuous", False)
    if not isinstance(continuous, bool):
        raise SpecError("$.continuous", "expected true or false")
    n = d.get("dim")
    if n is None and family == "simplex_indicator":
        n = 3
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SpecError("$.dim", "expected a positive integer")
    box = parse_box(d["box"], "$.box", n) if "box" in d else None
    if continuous:
        return _continuous(d, family, n, box)
    if family not in LATTICE_FAMILIES:
        raise SpecError("$.family", f"unknown family {family!r}; expected one of {', '.join(LATTICE_FAMILIES)}")

    if family == "table":
        if box is None:
            raise SpecError("$.box", "table specs need a box")
        vals = d.get("values")
        if not isinstance(vals, list):
            raise SpecError("$.values", "expected a list of {x, v} entries")
        table = {}
        for k, e in enumerate(vals):
            if not isinstance(e, dict) or "x" not in e or "v" not in e:
                raise SpecError(f"$.values[{k}]", "expected an object with 'x' and 'v'")
            x = _int_list(e["x"], f"$.values[{k}].x", n)
            if x not in box:
                raise SpecError(f"$.values[{k}].x", f"{list(x)} is outside the box")
            table[x] = _number(e["v"], f"$.values[{k}].v", allow_inf=True)
        sparse = d.get("sparse", True)
        try:
            return table_function(table, box, sparse=bool(sparse))
        except ValueError as exc:
            raise SpecError("$.values", str(exc)) from None

    if family == "indicator":
        pts = d.get("points")
        if not isinstance(pts, list) or not pts:
            raise SpecError("$.points", "expected a nonempty list of points")
        points = [_int_list(p, f"$.points[{k}]", n) for k, p in enumerate(pts)]
        if box is not None:
            for k, p in enumerate(points):
                if p not in box:
                    raise SpecError(f"$.points[{k}]", "point outside the box")
        return indicator(points, box)

    if family == "quadratic":
        if box is None:
            raise SpecError("$.box", "quadratic specs need a box")
        Q = _matrix(d.get("Q"), "$.Q", n)
        c = d.get("c", [0] * n)
        if not isinstance(c, list) or len(c) != n:
            raise SpecError("$.c", f"expected {n} numbers")
        c = [float(_number(v, f"$.c[{k}]")) for k, v in enumerate(c)]
        return quadratic_function(QuadraticSpec(Q, c), box)

    if family == "separable":
        pieces = d.get("pieces")
        if not isinstance(pieces, list) or len(pieces) != n:
            raise SpecError("$.pieces", f"expected {n} pieces")
        parsed = [parse_piece(g, f"$.pieces[{k}]") for k, g in enumerate(pieces)]
        try:
            return separable_function(parsed, box)
        except ValueError as exc:
            raise SpecError("$.box", str(exc)) from None

    if box is None:
        raise SpecError("$.box", "two_separable specs need a box")
    return two_separable_function(_two_separable(d, n), box)


def _continuous(d, family, n, box):
    if family not in CONTINUOUS_FAMILIES:
        raise SpecError("$.family", f"unknown continuous family {family!r}")
    universe = None
    if "universe" in d:
        u = d["universe"]
        if not isinstance(u, dict) or "lo" not in u or "hi" not in u:
            raise SpecError("$.universe", "expected {lo, hi}")
        conv = lambda vals, key: tuple(None if v is None else float(_number(v, f"$.universe.{key}"))
                                       for v in vals)
        if len(u["lo"]) != n or len(u["hi"]) != n:
            raise SpecError("$.universe", f"expected {n} bounds per side")
        universe = RealBox(conv(u["lo"], "lo"), conv(u["hi"], "hi"))
    try:
        if family == "quadratic":
            Q = _matrix(d.get("Q"), "$.Q", n)
            c = [float(_number(v, f"$.c[{k}]")) for k, v in enumerate(d.get("c", [0] * n))]
            F = ContinuousFunction.quadratic(Q, c, universe)
        elif family == "two_separable":
            F = ContinuousFunction.two_separable(_two_separable(d, n), universe)
        else:
            F = ContinuousFunction.simplex_indicator(n)
    except SpecError:
        raise
    except ValueError as exc:
        raise SpecError("$", str(exc)) from None
    F.box = box
    return F


def spec_of(f) -> dict:
    """Serialize a table or indicator oracle back to a spec dict (used by the fuzzer)."""
    if f.tag == "table":
        return {"dim": f.dim, "family": "table", "box": f.universe.to_dict(), "sparse": True,
                "values": [{"x": list(x), "v": _dump(v)} for x, v in sorted(f.meta["table"].items())]}
    if f.tag == "indicator":
        return {"dim": f.dim, "family": "indicator", "box": f.universe.to_dict(),
                "points": [list(p) for p in sorted(f.meta["points"])]}
    raise ValueError(f"cannot serialize a {f.tag!r} oracle")


def _dump(v):
    if v == INF:
        return "inf"
    if isinstance(v, Fraction):
        return str(v)
    return v
