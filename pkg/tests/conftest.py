"""Shared builders for randomized test families."""
from fractions import Fraction

from turandet import table_family


def _unit_fraction(rng):
    den = rng.randrange(5, 64)
    return Fraction(rng.randrange(1, den), den)


def monotone_ratio_table(rng, steps: int = 12):
    """Random exact table with (gamma_n - 1/2)/(1/2 - alpha_n) nondecreasing
    and every step ratio lambda_n inside (0, 1).

    Construction: pick ratios r_n nondecreasing in (0, 1) and shrink factors
    w_n in (0, 1); set s_0 = 1/2, s_{n+1} = s_n * w_n * r_n / r_{n+1},
    alpha_n = 1/2 - s_n, gamma_n = 1/2 + r_n * s_n. Then u_n, v_n > 0 and
    lambda_n = r_n * (1 - w_n) * (1 + q_n) / (1 + q_n - w_n) <= r_n < 1
    where 1 + q_n = r_{n+1}/r_n. The step bound itself may or may not hold.
    """
    r = sorted(_unit_fraction(rng) for _ in range(steps + 1))
    w = [_unit_fraction(rng) for _ in range(steps)]
    s = [Fraction(1, 2)]
    for n in range(steps):
        s.append(s[n] * w[n] * r[n] / r[n + 1])
    alphas = [Fraction(1, 2) - v for v in s]
    gammas = [Fraction(1, 2) + r[n] * s[n] for n in range(steps + 1)]
    return table_family(alphas, gammas, name="RandomMonotoneRatio")
