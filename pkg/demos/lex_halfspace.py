"""A halfspace that no single linear functional describes.

u(x) = x1 when x1 != 0, otherwise x2.  The set {u > 0} is the open halfspace
{x1 > 0} together with the half-plane slice {x1 = 0, x2 > 0}.
"""

from stepcone import LexHalfspace, StepLinearFunction, eval_step, halfspace_components, lineality_space
from stepcone.separation import linear_representation
from stepcone.structure import is_algebraic_open

u = StepLinearFunction([(1, 0, 0), (0, 1, 0)])
for x in [(2, 5, 7), (0, 3, 7), (0, 0, 7), (0, -1, 4)]:
    value, level = eval_step(u, x)
    where = "every functional vanishes" if level is None else f"decided by functional {level}"
    print(f"u{x} = {value}  ({where})")

H = LexHalfspace(u)
print("\nlineality space:", lineality_space(H)[0])
for c in halfspace_components(H).components:
    print(f"component {c.level}: Lin has dim {c.hull.dimension}, "
          f"its lineality has dim {c.lineality.dimension}")

print("\nalgebraically open:", is_algebraic_open(H))
print("single-functional representation:", linear_representation(H))
