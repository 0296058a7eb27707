"""
Directed midpoints and the convexity hierarchy
==============================================

Two ways of splitting ``x + y`` into a pair of nearby integer points, and
what each one says about a small set.
"""

from ddmconvex import classify, indicator
from ddmconvex.lattice import directed_midpoint_pair, rounded_midpoint_pair

###############################################################################
# Plain rounding sends every coordinate of the pair up or down together.
# The directed version rounds each coordinate toward whichever argument is
# larger there, so the first output leans toward ``x``.

x, y = (0, 0, 0), (2, 1, -1)
print("rounded :", rounded_midpoint_pair(x, y))
print("directed:", directed_midpoint_pair(x, y))

###############################################################################
# For the two-point set {(1,0),(0,1)} the directed split of the pair is the
# pair itself, while plain rounding asks for (1,1) and (0,0).

S = indicator([(1, 0), (0, 1)])
report = classify(S)
for name, verdict in report.verdicts.items():
    w = verdict.witness
    print(f"{name:28s} {verdict.holds!s:5s}", "" if w is None else f"witness {w.x} {w.y}")

###############################################################################
# A four-point set that is closed under plain rounding at distance two, but
# not under directed rounding.

S = indicator([(0, 0, 0), (1, 1, 0), (1, 0, -1), (2, 1, -1)])
report = classify(S, classes=["DDM", "globalDMC", "integrallyConvex"])
for name, verdict in report.verdicts.items():
    print(name, verdict.holds, None if verdict.witness is None else verdict.witness.to_dict())
print("broken implications:", report.implication_violations())
