"""Certificates that a point lies outside a cone.

For an asymmetric cone K and y not in K, the returned step-linear u is
positive on all of K, vanishes on the lineality space, and has u(y) <= 0.
"""

from stepcone import MixedCone, StepLinearFunction, included_in_halfspace, nonmember_certificate

K = MixedCone.make(2, [(1, 0), (0, 1)], [(1, 1)])
for y in [(-1, 5), (-1, -1), (3, -4)]:
    u = StepLinearFunction(nonmember_certificate(K, y))
    print(f"y = {y}: u = {u.cortege}, u(y) = {u(y)}, K inside {{u > 0}}: "
          f"{included_in_halfspace(K, u)}")

half = MixedCone.make(2, strict=[(0, 1)])
u = StepLinearFunction(nonmember_certificate(half, (3, 0)))
print(f"\nopen upper half-plane, y = (3, 0): u = {u.cortege}, u(y) = {u((3, 0))}")
