"""Open components of the closed quadrant with the origin removed.

The cone {x1 >= 0, x2 >= 0, x1 + x2 > 0} splits into three pieces: the two
open half-axes and the open quadrant.  Dominance moves up from an axis to
the interior but never back, and the interior is the greatest component.
"""

from stepcone import MixedCone, dominates, enumerate_components, icr_member, join_witness

K = MixedCone.make(2, nonstrict=[(1, 0), (0, 1)], strict=[(1, 1)])

g = enumerate_components(K)
print("components (greatest first):")
for node in g.nodes:
    print(f"  tight rows {node.signature.label():6s} witness {[str(a) for a in node.witness]}")

print("\n(1,0) dominated by (1,1):", dominates(K, (1, 0), (1, 1)))
print("(1,1) dominated by (1,0):", dominates(K, (1, 1), (1, 0)))

j = join_witness(K, (1, 0), (0, 1))
print("join of the two axes lands in", j.signature.label())

for x in [(1, 1), (1, 0), (0, 2)]:
    print(f"{x} in the intrinsic core: {icr_member(K, x)}")

print("\nDOT export:")
print(g.to_dot())
