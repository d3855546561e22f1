"""Two cones in a space with basis {e_i : i integer} plus e_+inf.

Vectors have finite support, so every sum below is finite.

* The nonnegative orthant minus the origin: y is dominated by x exactly when
  the support of y lies inside the support of x.  A fresh index always gives
  a point that x fails to dominate, so no component is greatest.
* A halfspace whose components are indexed by the integers plus +inf.  The
  face made of all the finite levels again has no greatest component.
"""

from stepcone.infdim import (HAT_FACE, ORTHANT, PLUS_INF, FinSuppVector, component_witness,
                             empty_icr_witness, ext_dominates, ext_signature)

e = FinSuppVector.e

x = e(1) + 2 * e(7)
print("orthant point", x, "does not dominate", empty_icr_witness(ORTHANT, x))

for m in [-2, 0, 3, PLUS_INF]:
    w = component_witness(m)
    print(f"witness {w} has signature {ext_signature(w)}")

print("\nlevel 1 below +inf:", ext_dominates(e(1) - e(2), e(PLUS_INF)))
print("level 2 below level 1:", ext_dominates(e(2) - e(3), e(1) - e(2)))

x = 3 * (e(0) - e(1)) + (e(-5) - e(-4))
print(f"\n{x} sits at {ext_signature(x)}; it fails to dominate {empty_icr_witness(HAT_FACE, x)}")
