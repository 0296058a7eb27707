import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ddmconvex.continuous import ContinuousFunction
from ddmconvex.errors import SpecError
from ddmconvex.functions import INF, Box
from ddmconvex.fuzz import random_table_spec
from ddmconvex.spec_io import loads, parse_box_arg, parse_function_spec, spec_of


def test_table_spec_with_inf_and_fraction():
    f = parse_function_spec(json.dumps({
        "dim": 2, "family": "table", "box": {"lo": [0, 0], "hi": [1, 1]},
        "values": [{"x": [0, 0], "v": 0}, {"x": [1, 0], "v": "1/3"}, {"x": [0, 1], "v": "inf"},
                   {"x": [1, 1], "v": None}]}))
    assert f((1, 0)) == Fraction(1, 3)
    assert f((0, 1)) == INF and f((1, 1)) == INF


def test_indicator_and_quadratic():
    s = parse_function_spec({"dim": 2, "family": "indicator", "points": [[1, 0], [0, 1]]})
    assert s((1, 0)) == 0 and s((0, 0)) == INF
    q = parse_function_spec({"dim": 2, "family": "quadratic", "Q": [[2, 1], [1, 2]], "c": [0, 1],
                             "box": {"lo": [-1, -1], "hi": [1, 1]}})
    assert q((1, 1)) == 7


def test_separable_and_two_separable():
    f = parse_function_spec({"dim": 2, "family": "separable",
                             "pieces": [{"kind": "table", "lo": -1, "values": [1, 0, 1]},
                                        {"kind": "abs", "a": 1, "domain": [0, 2]}]})
    assert f.universe == Box((-1, 0), (1, 2))
    assert f((0, 2)) == 1
    g = parse_function_spec({"dim": 2, "family": "two_separable", "box": "-2..2",
                             "xi": {"0": {"kind": "square"}}, "phi": {"0,1": {"kind": "abs", "w": 2}},
                             "psi": {"1,0": {"kind": "affine_max", "lines": [[1, 0], [-1, 0]]}}})
    assert g((1, -1)) == 1 + 4 + 0
    assert g.universe == Box.cube(-2, 2, 2)


def test_continuous_specs():
    F = parse_function_spec({"dim": 2, "family": "quadratic", "continuous": True, "Q": [[1, 0], [0, 1]],
                             "universe": {"lo": [-1, None], "hi": [1, None]}, "box": "-2..2"})
    assert isinstance(F, ContinuousFunction) and F.box == Box.cube(-2, 2, 2)
    assert F((2, 0)) == INF
    S = parse_function_spec({"family": "simplex_indicator", "continuous": True})
    assert S.n == 3 and S.family == "simplex_indicator"


@pytest.mark.parametrize("text, path", [
    ('{"dim": 1, "family": "table", "box": {"lo": [0], "hi": [1]}, "values": [{"x": [0], "v": NaN}]}', "$"),
    ('{"dim": 0, "family": "table"}', "$.dim"),
    ('{"dim": 1, "family": "spline", "box": "0..1"}', "$.family"),
    ('{"dim": 1, "family": "table", "values": []}', "$.box"),
    ('{"dim": 1, "family": "table", "box": "0..1", "values": [{"x": [5], "v": 0}]}', "$.values[0].x"),
    ('{"dim": 1, "family": "table", "box": "0..1", "values": [{"x": [0], "v": true}]}', "$.values[0].v"),
    ('{"dim": 2, "family": "quadratic", "box": "0..1", "Q": [[1, 2], [0, 1]]}', "$.Q[1][0]"),
    ('{"dim": 1, "family": "separable", "pieces": [{"kind": "table", "values": [0, 2, 1]}]}',
     "$.pieces[0].values[1]"),
    ('{"dim": 2, "family": "two_separable", "box": "0..1", "phi": {"01": {"kind": "abs"}}}', "$.phi"),
    ('{"dim": 1, "family": "indicator", "points": [[0.5]]}', "$.points[0][0]"),
    ('{"dim": 1, "family": "table", "box": {"lo": [2], "hi": [1]}, "values": []}', "$.box"),
    ('[1, 2]', "$"),
    ('{not json', "$"),
])
def test_spec_errors_carry_paths(text, path):
    with pytest.raises(SpecError) as exc:
        parse_function_spec(text)
    assert exc.value.path == path


def test_nonconvex_piece_message():
    with pytest.raises(SpecError) as exc:
        parse_function_spec({"dim": 1, "family": "separable",
                             "pieces": [{"kind": "table", "lo": 3, "values": [0, 2, 1]}]})
    assert "not discrete convex at index 1 (t=4)" in str(exc.value)


def test_parse_box_arg():
    assert parse_box_arg("-1..2", 3) == Box.cube(-1, 2, 3)
    assert parse_box_arg("0,1..2,3") == Box((0, 1), (2, 3))
    for bad in ("0-1", "a..b", "2..1"):
        with pytest.raises(SpecError):
            parse_box_arg(bad, 1)
    with pytest.raises(SpecError):
        parse_box_arg("0,0..1,1", 3)


def test_loads_rejects_constants():
    with pytest.raises(SpecError):
        loads('{"a": Infinity}')


@settings(max_examples=50)
@given(st.integers(0, 10 ** 6))
def test_table_spec_round_trip(seed):
    spec = random_table_spec(np.random.default_rng(seed))
    f = parse_function_spec(spec)
    g = parse_function_spec(json.dumps(spec_of(f)))
    for x in f.universe.points():
        assert f(x) == g(x)


def test_spec_of_indicator_and_unsupported():
    f = parse_function_spec({"dim": 1, "family": "indicator", "points": [[2], [0]]})
    assert spec_of(f)["points"] == [[0], [2]]
    q = parse_function_spec({"dim": 1, "family": "quadratic", "Q": [[1]], "box": "0..1"})
    with pytest.raises(ValueError):
        spec_of(q)
