"""
Steepest descent and scaling on the integer lattice
===================================================

Both algorithms only ask for the best point in a 3^n neighbourhood.
"""

import numpy as np

from ddmconvex import Box, QuadraticSpec, quadratic_function, scaling_minimize, steepest_descent
from ddmconvex.minimize import brute_force_argmin

###############################################################################
# A diagonally dominant quadratic with its minimizer away from the origin.

Q = np.array([[2.0, -1.0], [-1.0, 2.0]])
target = np.array([9.3, -4.6])
f = quadratic_function(QuadraticSpec(Q, -2 * Q @ target), Box.cube(-16, 16, 2))

###############################################################################
# Descent walks one step per call.  The number of calls, counting the last
# one that finds nothing better, is one more than the distance from the
# start to the nearest minimizer.

tr = steepest_descent(f, (-15, 15), with_L=True)
print("descent path length:", len(tr.path), "calls:", tr.iterations, "distance:", tr.L_star)

###############################################################################
# Scaling starts with a step of 2^ceil(log2(K+1)) and halves it.  Each phase
# searches only a small ball, so the total call count grows like log K.

st = scaling_minimize(f, (-15, 15))
print("scales  :", st.alphas)
print("calls   :", st.phase_calls, "total", st.total_calls)
print("result  :", st.minimizer, "certified:", st.certified)

value, minimizers = brute_force_argmin(f)
print("brute force agrees:", st.minimizer in minimizers and tr.minimizer in minimizers)
