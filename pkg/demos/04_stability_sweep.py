"""Almost-umbilical stability: shell size is linear in the pinching gap.

For a body with curvatures between kappa and (1 + eps) * kappa the shell
width stays below C(kappa, c) * eps with C = kappa (sqrt(2) - 1) / (kappa^2 + c),
and in the flat case R/r - 1 stays below (sqrt(2) - 1) * eps.  Both
constants are approached as eps -> 0; the sweep below shows the ratio
climbing toward 1 from below.
"""

import math

from curvshell import (
    PinchSpec,
    SpaceCurvature,
    quotient_bound,
    stability_quotient_constant,
    stability_width_constant,
    width_bound,
)

kappa = 1.0
spaces = [
    ("flat", SpaceCurvature.flat()),
    ("spherical", SpaceCurvature.spherical(1.0)),
    ("hyperbolic", SpaceCurvature.hyperbolic(kappa / math.sqrt(2.0))),
]

print(f"base curvature kappa = {kappa}\n")
for name, space in spaces:
    c_const = stability_width_constant(kappa, space)
    print(f"[{name}] C(kappa, c) = {c_const:.9f}")
    print(f"  {'eps':>8}  {'width bound':>14}  {'bound / (C eps)':>16}")
    for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6):
        pinch = PinchSpec.from_curvatures(space, kappa, (1 + eps) * kappa)
        wb = width_bound(space, pinch).bound
        print(f"  {eps:8.0e}  {wb:14.10f}  {wb / (c_const * eps):16.12f}")
    print()

c_q = stability_quotient_constant()
print(f"[flat quotient] C = sqrt(2) - 1 = {c_q:.9f}")
print(f"  {'eps':>8}  {'quotient - 1':>14}  {'excess / (C eps)':>16}")
for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6):
    pinch = PinchSpec.from_curvatures(SpaceCurvature.flat(), kappa, (1 + eps) * kappa)
    excess = quotient_bound(pinch).bound - 1.0
    print(f"  {eps:8.0e}  {excess:14.10f}  {excess / (c_q * eps):16.12f}")
