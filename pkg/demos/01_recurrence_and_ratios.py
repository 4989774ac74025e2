"""
Three-term recurrences, ratio sequences, and normalization
==========================================================

Every family here is a symmetric orthogonal polynomial sequence on [-1, 1]
driven by x*p_n = gamma_n*p_{n+1} + alpha_n*p_{n-1} with p_0 = 1 and the
convention alpha_0 = 0. Rational coefficients keep all of this exact.
"""
from fractions import Fraction

from turandet import (
    chebyshev_t,
    chebyshev_u,
    associated_family,
    eval_polys,
    example3,
    normalize,
    ratio_sandwich,
    ratios_at_one,
    table_family,
)

# Chebyshev T evaluated at a rational point stays rational: T_n(1/2) cycles
# through 1, 1/2, -1/2, -1, -1/2, 1/2, ...
t = chebyshev_t()
print("T_n(1/2) for n = 0..6:", [str(v) for v in eval_polys(t, 6, Fraction(1, 2))])

# The ratio sequence g_n = p_{n+1}(1)/p_n(1) drives everything downstream.
# For this family it decreases toward 1.
fam = example3(1)
rs = ratios_at_one(fam, 8)
print("\ng_n for a shifted-harmonic family (exact):")
for n, g in enumerate(rs.values):
    print(f"  g_{n} = {g}  (~{float(g):.6f})")

# g_n is sandwiched: 1 <= g_n <= (alpha_{n+1}gamma_n - alpha_n gamma_{n+1})
#                                / (gamma_n - gamma_{n+1})
print("\nsandwich bounds:")
for row in ratio_sandwich(fam, 5):
    print(f"  n={row.n}  1 <= {float(row.g):.6f} <= {float(row.upper):.6f}"
          f"  ok={row.lower_ok and row.upper_ok}")

# Normalizing at 1 rescales so P_n(1) = 1, which is the same thing as making
# the transformed coefficients sum to one.
nf = normalize(fam, 6)
print("\nnormalized coefficients (alpha~_n + gamma~_n = 1):")
for n in range(4):
    a, g = nf.alpha(n), nf.gamma(n)
    print(f"  n={n}: {a} + {g} = {a + g}")
print("P_n(1) after normalization:", [str(v) for v in eval_polys(nf, 4, 1)])

# Associated families shift the coefficient index with a fresh start; order 1
# applied to T gives classical Chebyshev U. The built-in U family is the
# version normalized at 1, so it returns U_n(x)/(n+1).
u = chebyshev_u()
assoc = associated_family(t, 1)
print("\nassociated(T, 1) and U at x = 1/2:")
print("  classical U_n(1/2):      ",
      [str(v) for v in eval_polys(assoc, 5, Fraction(1, 2))])
print("  normalized U_n(1/2)*(n+1):",
      [str(v * (k + 1)) for k, v in enumerate(eval_polys(u, 5, Fraction(1, 2)))])

# Finite tables work too; strings are parsed exactly.
tab = table_family([0, "1/4", "1/4"], ["3/4", "1/2", "1/2"])
print("\ntable family is exact:", tab.exact,
      "- p_n(2/3):", [str(v) for v in eval_polys(tab, 3, Fraction(2, 3))])
