"""Seeded instance corpora shared by the unit and acceptance tests."""
from functools import lru_cache

import numpy as np

from ddmconvex import parse_function_spec
from ddmconvex.classify import is_ddm_convex
from ddmconvex.fuzz import random_dd_quadratic_spec, random_table_spec, random_two_separable_spec

TABLE_SEED = 20240611
DDM_SEED = 7


@lru_cache(maxsize=None)
def table_corpus(count=500, seed=TABLE_SEED):
    """Random tables on boxes up to [0,3]^3, values 0..9, 20% holes."""
    rng = np.random.default_rng(seed)
    return tuple(parse_function_spec(random_table_spec(rng)) for _ in range(count))


@lru_cache(maxsize=None)
def ddm_corpus(seed=DDM_SEED):
    """DDM-passing instances: passing tables, 2-separable functions and diagonally dominant quadratics."""
    rng = np.random.default_rng(seed)
    out = [f for f in table_corpus() if is_ddm_convex(f).holds]
    for _ in range(30):
        out.append(parse_function_spec(random_two_separable_spec(rng, n=int(rng.integers(1, 4)), side=2)))
    for _ in range(30):
        out.append(parse_function_spec(random_dd_quadratic_spec(rng, n=int(rng.integers(1, 3)), side=3)))
    return tuple(out)
