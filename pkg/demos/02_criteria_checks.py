"""
Sufficient criteria for nonnegative Turán determinants
======================================================

The checkers certify Delta_n(x) = P_n(x)^2 - P_{n-1}(x)P_{n+1}(x) >= 0 on
[-1, 1] for polynomials normalized at 1, straight from coefficient
inequalities. Everything below runs in exact rational arithmetic.
"""
import json
from fractions import Fraction

from turandet import (
    DeltaSeq,
    check_corollary2,
    check_lambda_route,
    check_theorem1,
    check_y_route,
    chebyshev_t,
    classify,
    corollary2_family,
    example3,
    lambda_data,
    pollaczek,
)

# The main criterion: alpha increasing to <= 1/2, gamma decreasing, sums
# <= 1, a step inequality, and an initial inequality.
rep = check_theorem1(example3(1), 50)
print("main criterion on a shifted-harmonic family:", rep.overall.value)
for cond in rep.conditions:
    print(f"  {cond.label}: holds={cond.holds}")

# Chebyshev T is the classic near-miss: its determinant 1 - x^2 is
# nonnegative, but the hypotheses fail (alpha and gamma are flat).
neg = check_theorem1(chebyshev_t(), 50)
print("\nChebyshev T:", neg.overall.value)
for cond in neg.conditions:
    if cond.holds is False:
        print(f"  {cond.label} first fails at n={cond.first_violation}")

# Step data: u_n = alpha_{n+1} - alpha_n, v_n = gamma_n - gamma_{n+1},
# lambda_n = v_n / u_n. This family sits exactly on the admissible boundary
# lambda_n = (1 + lambda_{n-1})/(3 - lambda_{n-1}).
ld = lambda_data(example3(1), 6)
print("\nlambda_n =", [str(l) for l in ld.lam])

lam_rep = check_lambda_route(example3(1), 100)
y_rep = check_y_route(example3(1), 100)
print("step-ratio route:", lam_rep.overall.value,
      "| transformed route:", y_rep.overall.value)

# Two-constant shapes: alpha_n = 1/2 - A*delta_n, gamma_n = 1/2 + G*delta_n
# with delta decreasing to 0. The initial value has to land in an explicit
# window, here [1/6, 1/4].
delta = DeltaSeq(lambda n: Fraction(1, 5) / (n + 1), limit=0)
fam2 = corollary2_family(2, 1, delta)
rep2 = check_corollary2(2, 1, delta, 50, family=fam2)
print("\ntwo-constant shape:", rep2.overall.value)
low = rep2.condition("delta0-above-lower-bound")
up = rep2.condition("delta0-below-upper-bound")
print("  window:", str(low.witness[0]), "<=", str(low.witness[1]),
      "<=", str(up.witness[1]))

# classify() runs every applicable checker and lists the satisfied ones.
print("\nclassify(Pollaczek lam=1, a=1/2):", classify(pollaczek(1, Fraction(1, 2)), 50))

# Reports serialize to JSON for downstream tooling.
print("\nJSON form of the two-constant report:")
print(json.dumps(rep2.to_json(), indent=2, default=str)[:400], "...")
