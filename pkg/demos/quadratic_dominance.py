"""
Which quadratics are directed-midpoint convex?
==============================================

Compare the brute-force verdict with a row test on the matrix.
"""

import numpy as np

from ddmconvex import Box, QuadraticSpec, is_ddm_convex, quadratic_function
from ddmconvex.functions import quadratic_is_diag_dominant, quadratic_to_two_separable
from ddmconvex.fuzz import random_symmetric_q

rng = np.random.default_rng(1)

###############################################################################
# Positive definite is not enough: this matrix gives a strictly convex
# function whose integer restriction already fails on a 5 x 5 box.

q = QuadraticSpec([[5, 2], [2, 1]])
v = is_ddm_convex(quadratic_function(q, Box.cube(-2, 2, 2)))
print("eigenvalues:", np.linalg.eigvalsh(q.Q), "DDM:", v.holds, "witness:", v.witness.to_dict())

###############################################################################
# Random symmetric matrices, half of them drawn close to the dominance
# boundary.  The two tests agree on all of them.

agree = 0
for _ in range(100):
    n = int(rng.integers(2, 4))
    q = QuadraticSpec(random_symmetric_q(rng, n))
    d = is_ddm_convex(quadratic_function(q, Box.cube(-3, 3, n))).holds
    agree += d == bool(quadratic_is_diag_dominant(q))
print(f"{agree}/100 agree")

###############################################################################
# A dominant matrix splits into univariate convex terms in x_i, x_i - x_j
# and x_i + x_j.

q = QuadraticSpec([[3, -1, 1], [-1, 2, 0.5], [1, 0.5, 2]], [1, 0, -2])
two = quadratic_to_two_separable(q)
X = Box.cube(-3, 3, 3).points_array()
print("max gap over the box:", np.abs(q.batch(X) - two.batch(X)).max())
