"""
From real convex functions to lattice functions
===============================================

Sample ``F(x / alpha)`` at integer points and ask whether the result keeps
the discrete property.
"""

import numpy as np

from ddmconvex import Box
from ddmconvex.classify import is_ddm_convex
from ddmconvex.continuous import (ContinuousFunction, continuous_argmin, fractional_restriction,
                                  verify_continuous_proximity, verify_r_ddm)

###############################################################################
# The indicator of the standard triangle in R^3.  At scale 1 its lattice
# points are the unit vectors, which are fine.  At scale 1/2 the six points
# no longer pass.

F = ContinuousFunction.simplex_indicator(3)
f2 = fractional_restriction(F, 2, Box.cube(0, 2, 3))
print("points at scale 1/2:", f2.domain_points())
v = verify_r_ddm(F, 3, Box.cube(0, 1, 3))
print("holds:", v.holds, "first failing alpha:", v.detail.get("failed_alpha"), "witness:", v.witness.to_dict())

###############################################################################
# A dominant quadratic passes at every scale we try, and its discrete
# minimizers stay within distance n of the real one.

Q = np.array([[2.0, 0.5], [0.5, 1.5]])
G = ContinuousFunction.quadratic(Q, -2 * Q @ np.array([0.7, -1.2]))
print("RDDM up to 3:", verify_r_ddm(G, 3, Box.cube(-2, 2, 2)).holds)
xbar, unique = continuous_argmin(G)
print("real minimizer:", xbar, "unique:", unique)
print(verify_continuous_proximity(G, Box.cube(-5, 5, 2)).to_dict())
print("restriction at scale 1 is DDM:", is_ddm_convex(fractional_restriction(G, 1, Box.cube(-3, 3, 2))).holds)
