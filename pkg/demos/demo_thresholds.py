"""Threshold ladder for the two-fixed-centers convexity problem.

For a sweep of mass ratios mu, print the critical energies of the
heavier (Earth) and lighter (Moon) primaries, the second threshold
c_E'', the convexity threshold c0 (the root of the energy quartic), and
the Jacobi energy c_J of the saddle.  The bracket

    c_E'' < c0 < c_J

holds for every mu != 1/2, and the whole ladder collapses to c_J = -2
at equal masses.
"""

import numpy as np

from euler2c import ProblemParams, thresholds

header = f"{'mu':>6} {'c_E':>12} {'c_M':>12} {'c_E_pp':>12} " \
         f"{'c0':>12} {'c_J':>12}"
print(header)
print("-" * len(header))
for mu in np.arange(0.05, 0.51, 0.05):
    p = ProblemParams(float(mu))
    th = thresholds(p)
    print(f"{p.mu:6.2f} {th.c_E:12.6f} {th.c_M:12.6f} "
          f"{th.c_E_pp:12.6f} {th.c0:12.6f} {p.c_jacobi:12.6f}")

print()
print("gap c_J - c0 closes like (1-2mu)^4 near equal masses:")
for mu in (0.4, 0.45, 0.48, 0.49):
    p = ProblemParams(mu)
    th = thresholds(p)
    m4 = (1 - 2 * mu) ** 4
    print(f"  mu={mu:5.2f}  c_J-c0={p.c_jacobi - th.c0:.3e}  "
          f"(1-2mu)^4={m4:.3e}")
