"""Fiberwise convexity of the Hill region over the position plane.

At equal masses the curvature numerator C of the zero-velocity curves
is strictly positive on every bounded component for all subcritical
energies, so the Hill lobes are convex fibers.  For unequal masses the
Earth lobe loses convexity at the critical energy: C turns negative on
the boundary just before the cone vertex at q1 = l.
"""

import numpy as np

from euler2c import (
    HillComponent,
    ProblemParams,
    curvature_numerator,
    fiberwise_verdict,
    hill_boundary,
)

p = ProblemParams(0.5)
print("equal masses: min C over the Earth-lobe boundary")
for e in (-2.1, -3.0, -6.0, -20.0):
    pts = hill_boundary(p, e, HillComponent.EARTH, n=2048)
    cv = curvature_numerator((pts[:, 0], pts[:, 1]), p)
    print(f"  e = {e:6.1f}:  min C = {np.min(cv):.6e}  "
          f"({pts.shape[0]} boundary samples)")

p3 = ProblemParams(0.3)
rep = fiberwise_verdict(p3, p3.c_jacobi)
print(f"\nmu = 0.3 at the critical energy: verdict = {rep.verdict}")
e, (q1, q2), cval = rep.witness
print(f"witness on the boundary: C({q1:.6f}, {q2:.6f}) = {cval:.6e}")
print(f"vertex abscissa l = {p3.l:.6f} (witness sits just inside)")
