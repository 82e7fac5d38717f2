"""Exact verification of the algebraic backbone.

Every closed-form derivative table, determinant factorization, and
positivity claim in the package rests on a polynomial identity over the
rationals (with surd symbols for the square roots that appear).  The
suite below checks each one by exact arithmetic: a pass means the
difference is the literal zero polynomial.  Sturm-sequence sign
certificates then pin the sign of the key univariate polynomials on
their intervals.
"""

from euler2c import positivity_certificates, verify_all

for r in verify_all():
    status = "pass" if r.passed else "FAIL"
    print(f"{r.name:32s} {status}  ({1000 * r.elapsed:.2f} ms)")

print("\nsign certificates:")
certs = positivity_certificates()
print(f"  quartic  negative on (1/3,1/2): "
      f"{certs['quartic_negative'].certified}"
      f"  (value at 1/3: {certs['quartic_at_one_third']})")
print(f"  sextic   positive for x < 1/2:  "
      f"{certs['sextic_positive'].certified}"
      f"  (value at 1/2: {certs['sextic_at_one_half']})")
print(f"  quadratic has no real root:     "
      f"{certs['quadratic_no_real_root']}"
      f"  (reduced discriminant: {certs['quadratic_discriminant']})")
