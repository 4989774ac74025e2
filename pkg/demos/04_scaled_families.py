"""
Scaled determinants: log-concave weights preserve nonnegativity
===============================================================

For polynomials normalized at 1, replacing P_n by sigma_n*P_n keeps the
Turán determinants nonnegative exactly when the positive weights satisfy
sigma_n^2 >= sigma_{n-1}*sigma_{n+1}. Log-convex weights can break it.
"""
from fractions import Fraction

from turandet import ScalingSequence, chebyshev_t, legendre, scaled_scan

# Detector first: 2n+1 is log-concave, its reciprocal is log-convex, and a
# geometric sequence sits exactly on the boundary.
for label, fn in (("2n+1", lambda n: Fraction(2 * n + 1)),
                  ("1/(2n+1)", lambda n: Fraction(1, 2 * n + 1)),
                  ("3^n", lambda n: Fraction(3) ** n)):
    seq = ScalingSequence(fn)
    print(f"sigma_n = {label:>9}: log-concave up to 40 ->",
          seq.log_concave_up_to(40))

# Legendre (already normalized) with sigma_n = 2n+1: scan stays nonnegative.
good = scaled_scan(legendre(), lambda n: 2 * n + 1, 50)
print("\nLegendre scaled by 2n+1: all nonnegative =", good.all_nonnegative,
      "| sigma log-concave =", good.sigma_log_concave)

# The reciprocal weights flip the first determinant negative at the
# endpoints: sigma_1^2 - sigma_0*sigma_2 = 1/9 - 1/5 = -4/45.
bad = scaled_scan(legendre(), lambda n: Fraction(1, 2 * n + 1), 10)
e = bad.entry(1)
print("Legendre scaled by 1/(2n+1): all nonnegative =", bad.all_nonnegative,
      f"| min Delta_1 = {e.min_value:.6f} at x = {e.argmin_x}",
      f"(exact -4/45 = {float(Fraction(-4, 45)):.6f})")

# Same effect on Chebyshev T with the strongly log-convex sigma_n = 2^{n^2}.
ctrl = scaled_scan(chebyshev_t(), lambda n: Fraction(2) ** (n * n), 5)
print("T scaled by 2^(n^2):  all nonnegative =", ctrl.all_nonnegative,
      "| min Delta_1 =", ctrl.entry(1).min_value)
