"""Three-term recurrences for symmetric orthogonal polynomials on [-1, 1].

The recurrence is x*p_n(x) = gamma_n*p_{n+1}(x) + alpha_n*p_{n-1}(x) with
p_{-1} = 0, p_0 = 1 and alpha_0 = 0, so p_1(x) = x/gamma_0. A family is just
the pair of coefficient callables plus an exactness flag; evaluation,
value-at-1 ratios, normalization, associated shifts, scalings and the
orthonormal form all derive from that.
"""
from __future__ import annotations

import dataclasses
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import mpmath

from .arith import (
    DEFAULT_DIGIT_CAP,
    DEFAULT_MARGIN,
    EXTENDED_DPS,
    Num,
    exceeds_digit_cap,
    is_exact,
    less_equal,
    strictly_less,
    to_mpf,
)
from .errors import NonpositiveRatio, ParamError, TableRangeError

__all__ = [
    "CoefficientFamily",
    "RatioSequence",
    "NormalizedFamily",
    "ScalingSequence",
    "SandwichRow",
    "coefficients",
    "float_view",
    "eval_polys",
    "ratios_at_one",
    "normalize",
    "associated_family",
    "scaled_polys",
    "orthonormal_offdiag",
    "ratio_sandwich",
]


@dataclass(frozen=True)
class CoefficientFamily:
    """Recurrence coefficients (alpha_n, gamma_n) defining one polynomial family.

    ``alpha`` and ``gamma`` must be pure callables on n >= 0 with alpha(0) = 0
    and gamma(0) > 0. ``exact`` marks families whose coefficients are ints or
    Fractions, enabling the rational arithmetic paths.
    """

    name: str
    alpha: Callable[[int], Num]
    gamma: Callable[[int], Num]
    exact: bool = True
    params: Mapping[str, object] = field(default_factory=dict)
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.alpha(0) != 0:
            raise ParamError(f"{self.name}: alpha_0 must be 0 (got {self.alpha(0)})")
        if not self.gamma(0) > 0:
            raise ParamError(f"{self.name}: gamma_0 must be positive (got {self.gamma(0)})")


def float_view(family) -> CoefficientFamily:
    """Same coefficients coerced to float; exact mode disabled."""
    a, g = family.alpha, family.gamma
    return CoefficientFamily(
        name=family.name,
        alpha=lambda n, _a=a: float(_a(n)),
        gamma=lambda n, _g=g: float(_g(n)),
        exact=False,
        params=dict(family.params),
        meta=dict(family.meta),
    )


def coefficients(family, hi: int):
    """(alpha_0..alpha_hi, gamma_0..gamma_hi) as parallel lists."""
    if hi < 0:
        raise ParamError("index bound must be >= 0")
    ns = range(hi + 1)
    return [family.alpha(n) for n in ns], [family.gamma(n) for n in ns]


def eval_polys(family, n_max: int, x, dps: int | None = None,
               digit_cap: int = DEFAULT_DIGIT_CAP) -> list:
    """Evaluate p_0(x)..p_{n_max}(x) by the forward recurrence.

    Arithmetic mode: exact Fractions when the family is exact and x is an
    int/Fraction; mpmath at ``dps`` digits when given; doubles otherwise.
    Exact runs that blow past ``digit_cap`` decimal digits per value fall back
    to 50-digit floats for the remaining indices.
    """
    if n_max < 0:
        raise ParamError("n_max must be >= 0")
    if dps is not None:
        with mpmath.workdps(dps):
            xm = to_mpf(x)
            p = [mpmath.mpf(1)]
            if n_max >= 1:
                p.append(xm / to_mpf(family.gamma(0)))
            for n in range(1, n_max):
                nxt = (xm * p[n] - to_mpf(family.alpha(n)) * p[n - 1]) / to_mpf(family.gamma(n))
                p.append(nxt)
            return p

    if family.exact and is_exact(x):
        xf = Fraction(x)
        p: list = [Fraction(1)]
        if n_max >= 1:
            p.append(xf / family.gamma(0))
        for n in range(1, n_max):
            nxt = (xf * p[n] - family.alpha(n) * p[n - 1]) / family.gamma(n)
            if exceeds_digit_cap(nxt, digit_cap):
                # rational blow-up guard: finish in extended floats
                with mpmath.workdps(EXTENDED_DPS):
                    p = [to_mpf(v) for v in p]
                    p.append(to_mpf(nxt))
                    xm = to_mpf(xf)
                    for m in range(n + 1, n_max):
                        p.append((xm * p[m] - to_mpf(family.alpha(m)) * p[m - 1])
                                 / to_mpf(family.gamma(m)))
                return p
            p.append(nxt)
        return p

    xx = float(x)
    ga = [float(family.gamma(n)) for n in range(max(1, n_max))]
    al = [0.0] + [float(family.alpha(n)) for n in range(1, n_max)]
    pf = [1.0]
    if n_max >= 1:
        pf.append(xx / ga[0])
    for n in range(1, n_max):
        pf.append((xx * pf[n] - al[n] * pf[n - 1]) / ga[n])
    return pf


@dataclass(frozen=True)
class RatioSequence:
    """Values g_n = p_{n+1}(1)/p_n(1); exact=False after a digit-cap fallback."""

    values: tuple
    exact: bool

    def poly_at_one(self, n: int):
        """p_n(1) as the cumulative product g_0*...*g_{n-1}."""
        if n > len(self.values):
            raise ParamError(f"need {n} ratios, have {len(self.values)}")
        out = Fraction(1) if self.exact else 1.0
        for g in self.values[:n]:
            out = out * g
        return out


def ratios_at_one(family, N: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> RatioSequence:
    """g_0..g_{N-1} where g_0 = 1/gamma_0 and g_n = (1 - alpha_n/g_{n-1})/gamma_n.

    Raises NonpositiveRatio as soon as some g_n <= 0 (normalization at 1 is
    then impossible past that index).
    """
    if N < 1:
        raise ParamError("N must be >= 1")
    exact = family.exact
    values: list = []
    g = 1 / family.gamma(0)
    n = 0
    while True:
        if not g > 0:
            raise NonpositiveRatio(n, g)
        if exact and exceeds_digit_cap(g, digit_cap):
            # finish in extended-precision floats, flag the result inexact
            with mpmath.workdps(EXTENDED_DPS):
                values = [to_mpf(v) for v in values]
                gm = to_mpf(g)
                while True:
                    if not gm > 0:
                        raise NonpositiveRatio(n, gm)
                    values.append(gm)
                    n += 1
                    if n == N:
                        return RatioSequence(tuple(values), False)
                    gm = (1 - to_mpf(family.alpha(n)) / gm) / to_mpf(family.gamma(n))
        values.append(g)
        n += 1
        if n == N:
            return RatioSequence(tuple(values), exact)
        g = (1 - family.alpha(n) / g) / family.gamma(n)


class NormalizedFamily:
    """View of a family rescaled so every polynomial equals 1 at x = 1.

    alpha_tilde(n) = alpha_n/g_{n-1} and gamma_tilde(n) = gamma_n*g_n, which
    makes alpha_tilde + gamma_tilde = 1 identically. The ratio cache extends
    lazily on demand; extension is lock-guarded, so concurrent readers are
    safe and see the same values.

    Duck-types CoefficientFamily (.alpha/.gamma/.exact/...), so every
    evaluation helper in this module accepts it directly.
    """

    def __init__(self, base: CoefficientFamily, ratios: RatioSequence):
        self.base = base
        self._g: list = list(ratios.values)
        self._exact = bool(ratios.exact and base.exact)
        self._lock = threading.Lock()

    @property
    def name(self) -> str:
        return f"{self.base.name}:normalized"

    @property
    def params(self) -> Mapping[str, object]:
        return self.base.params

    @property
    def meta(self) -> Mapping[str, object]:
        return {}

    @property
    def exact(self) -> bool:
        return self._exact

    def ratio(self, n: int):
        """g_n, extending the cache if needed."""
        if n < 0:
            raise ParamError("ratio index must be >= 0")
        if n >= len(self._g):
            with self._lock:
                self._extend(n)
        return self._g[n]

    def _extend(self, n: int) -> None:
        # called under self._lock
        k = len(self._g)
        g = self._g[-1]
        while k <= n:
            a, c = self.base.alpha(k), self.base.gamma(k)
            if isinstance(g, mpmath.mpf):
                with mpmath.workdps(EXTENDED_DPS):
                    g = (1 - to_mpf(a) / g) / to_mpf(c)
            else:
                g = (1 - a / g) / c
            if not g > 0:
                raise NonpositiveRatio(k, g)
            if self._exact and exceeds_digit_cap(g):
                with mpmath.workdps(EXTENDED_DPS):
                    self._g = [to_mpf(v) for v in self._g]
                    g = to_mpf(g)
                self._exact = False
            self._g.append(g)
            k += 1

    def alpha_tilde(self, n: int):
        if n == 0:
            return self.base.alpha(0)
        g = self.ratio(n - 1)
        a = self.base.alpha(n)
        if isinstance(g, mpmath.mpf) and is_exact(a):
            a = to_mpf(a)
        return a / g

    def gamma_tilde(self, n: int):
        g = self.ratio(n)
        c = self.base.gamma(n)
        if isinstance(g, mpmath.mpf) and is_exact(c):
            c = to_mpf(c)
        return c * g

    # --- CoefficientFamily duck-type ---
    @property
    def alpha(self):
        return self.alpha_tilde

    @property
    def gamma(self):
        return self.gamma_tilde


def normalize(family, N: int) -> NormalizedFamily:
    """Normalized view of ``family``; validates g_0..g_{N-1} stay positive."""
    if isinstance(family, NormalizedFamily):
        return family
    return NormalizedFamily(family, ratios_at_one(family, N))


def associated_family(family: CoefficientFamily, k: int) -> CoefficientFamily:
    """Shift both coefficient sequences by k (alpha_0 pinned back to 0)."""
    if k < 0:
        raise ParamError("association shift must be >= 0")
    if k == 0:
        return dataclasses.replace(family)
    a, g, zero = family.alpha, family.gamma, family.alpha(0)
    return CoefficientFamily(
        name=f"{family.name}:assoc{k}",
        alpha=lambda n, _a=a, _k=k, _z=zero: _z if n == 0 else _a(n + _k),
        gamma=lambda n, _g=g, _k=k: _g(n + _k),
        exact=family.exact,
        params={**dict(family.params), "assoc_shift": k},
    )


@dataclass(frozen=True)
class ScalingSequence:
    """Positive weights sigma_n applied on top of normalized polynomials."""

    sigma: Callable[[int], Num]

    @classmethod
    def from_values(cls, values: Sequence[Num]) -> "ScalingSequence":
        vals = tuple(values)

        def at(n: int, _v=vals):
            if not 0 <= n < len(_v):
                raise TableRangeError(n, len(_v))
            return _v[n]

        return cls(at)

    def __call__(self, n: int):
        return self.sigma(n)

    def log_concave_up_to(self, n_max: int, margin: float = 1e-15) -> bool:
        """Whether sigma_n^2 >= sigma_{n-1}*sigma_{n+1} for 1 <= n <= n_max."""
        vals = [self.sigma(n) for n in range(n_max + 2)]
        if any(not v > 0 for v in vals):
            raise ParamError("scaling values must be positive")
        exact = all(is_exact(v) for v in vals)
        return all(
            less_equal(vals[n - 1] * vals[n + 1], vals[n] * vals[n], exact, margin)
            for n in range(1, n_max + 1)
        )


def _sigma_callable(sigma) -> Callable[[int], Num]:
    if isinstance(sigma, ScalingSequence):
        return sigma
    if callable(sigma):
        return sigma
    return ScalingSequence.from_values(sigma)


def scaled_polys(family, sigma, n_max: int, x, dps: int | None = None) -> list:
    """[sigma_n * p_n(x)] for the normalized-at-1 recurrence values."""
    s = _sigma_callable(sigma)
    p = eval_polys(family, n_max, x, dps=dps)
    out = []
    for n in range(n_max + 1):
        s_n, p_n = s(n), p[n]
        if isinstance(p_n, mpmath.mpf) and is_exact(s_n):
            s_n = to_mpf(s_n)
        out.append(s_n * p_n)
    return out


def orthonormal_offdiag(family, N: int) -> list[float]:
    """Jacobi-matrix off-diagonals a_k = sqrt(alpha_k*gamma_{k-1}), k = 1..N."""
    if N < 1:
        raise ParamError("N must be >= 1")
    out = []
    for k in range(1, N + 1):
        prod = family.alpha(k) * family.gamma(k - 1)
        if not prod > 0:
            raise ParamError(f"alpha_{k}*gamma_{k - 1} must be positive (got {prod})")
        out.append(math.sqrt(float(prod)))
    return out


@dataclass(frozen=True)
class SandwichRow:
    """One row of the two-sided ratio bound 1 <= g_n <= bound_n."""

    n: int
    g: Num
    upper: Num  # +inf when gamma_n - gamma_{n+1} <= 0 (bound undefined)
    lower_ok: bool
    upper_ok: bool
    gamma_step_decreasing: bool


def ratio_sandwich(family, N: int, margin: float = DEFAULT_MARGIN) -> list[SandwichRow]:
    """Check 1 <= g_n <= (alpha_{n+1}*gamma_n - alpha_n*gamma_{n+1})/(gamma_n - gamma_{n+1}).

    The upper bound needs gamma_n > gamma_{n+1}; rows where that fails carry
    upper = +inf, upper_ok = True and gamma_step_decreasing = False so the
    hypothesis breach stays visible.
    """
    rs = ratios_at_one(family, N)
    exact = rs.exact
    rows = []
    for n, g in enumerate(rs.values):
        a0, a1 = family.alpha(n), family.alpha(n + 1)
        c0, c1 = family.gamma(n), family.gamma(n + 1)
        den = c0 - c1
        dec = strictly_less(0, den, exact, margin)
        if dec:
            upper = (a1 * c0 - a0 * c1) / den
            upper_ok = less_equal(g, upper, exact, margin)
        else:
            upper = math.inf
            upper_ok = True
        rows.append(SandwichRow(
            n=n, g=g, upper=upper,
            lower_ok=less_equal(1, g, exact, margin),
            upper_ok=upper_ok,
            gamma_step_decreasing=dec,
        ))
    return rows
