"""Separating cones with step-linear functions.

Two disjoint convex cones need not be separated by one hyperplane with one
of them strictly on the positive side.  Here K1 = {u > 0} for u = (x1, x2)
and K2 is its complement {u <= 0}.  The functional x1 only separates weakly
(both cones meet the line x1 = 0), so the construction restricts to that line
and adds a second level.
"""

from stepcone import (GE, LexHalfspace, MixedCone, StepLinearFunction, included_in_halfspace,
                      regular_extension, separate)

K1 = LexHalfspace(StepLinearFunction([(1, 0), (0, 1)]))
K2 = LexHalfspace(StepLinearFunction([(-1, 0), (0, -1)]), GE)

cert = separate(K1, K2)
print("separating cortege:", cert.cortege, "verified:", cert.verified)

slice_ = MixedCone.make(2, nonstrict=[(1, 0), (-1, 0)], strict=[(0, 1)])
print("the slice {x1 = 0, x2 > 0} vs {x2 <= 0}:",
      separate(slice_, MixedCone.make(2, nonstrict=[(0, -1)])).cortege)

quadrant = MixedCone.make(2, [(1, 0), (0, 1)], [(1, 1)])
lower = MixedCone.make(2, [(-1, 0), (0, -1)], [(-1, -1)])
print("quadrant vs its negative:", separate(quadrant, lower).cortege)

# a regular extension: an asymmetric lex halfspace containing K with L_K inside L_H
slab = MixedCone.make(3, nonstrict=[(1, 0, 0), (-1, 0, 0)], strict=[(0, 1, 0)])
H = regular_extension(slab)
print("\nregular extension of the slab:", H.u.cortege)
print("slab inside it:", included_in_halfspace(slab, H.u))
print("u vanishes on e3:", H.u((0, 0, 1)) == 0)
