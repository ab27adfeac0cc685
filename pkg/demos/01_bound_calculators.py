"""Tour of the closed-form shell bounds in the three geometries.

For a convex body whose normal curvatures lie between kappa1 and kappa2,
the boundary fits in a spherical shell centered at the inscribed-ball
center.  This script prints the sharp width bound (all geometries), the
sharp quotient bound (flat only), and the outer-radius bound as a
function of the inscribed radius.
"""

import numpy as np

from curvshell import (
    PinchSpec,
    SpaceCurvature,
    outer_radius_bound,
    quotient_bound,
    quotient_bound_coarse,
    width_bound,
)

kappa1, kappa2 = 1.0, 2.0

print(f"pinching: {kappa1} <= normal curvature <= {kappa2}\n")
for space in (SpaceCurvature.flat(), SpaceCurvature.spherical(1.0), SpaceCurvature.hyperbolic(0.9)):
    pinch = PinchSpec.from_curvatures(space, kappa1, kappa2)
    wb = width_bound(space, pinch)
    print(f"[{space.kind} c={space.c:+.2f}]  circle radii r1={pinch.r1:.6f}, r2={pinch.r2:.6f}")
    print(f"  width bound   R - r <= {wb.bound:.9f}   (attained at r = {wb.maximizer_r:.9f})")
    if space.is_flat:
        qb = quotient_bound(pinch)
        print(f"  quotient bound R/r <= {qb.bound:.9f}   (attained at r = {qb.maximizer_r:.9f})")
        print(f"  coarse bound   R/r <= {quotient_bound_coarse(pinch):.9f}")
    print()

# The outer-radius bound vanishes at both ends of the inscribed-radius range:
# a body with the smallest or largest possible inscribed ball is a ball itself.
space = SpaceCurvature.flat()
pinch = PinchSpec.from_curvatures(space, kappa1, kappa2)
print("outer-radius bound along the inscribed-radius range (flat):")
for r in np.linspace(pinch.r2, pinch.r1, 9):
    print(f"  r = {r:.4f}  ->  R <= {outer_radius_bound(space, pinch, float(r)):.6f}")
