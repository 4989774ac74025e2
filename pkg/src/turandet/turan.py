"""Turán determinants Delta_n(x) = p_n(x)^2 - p_{n-1}(x)*p_{n+1}(x) and grid scans.

The scanner evaluates whole polynomial tables on a fixed symmetric grid in
double precision, reports the per-degree grid minimum, and re-checks any
minimum that sits inside a near-zero band with 50-digit arithmetic before
calling it negative — sign near zero is the entire point of the exercise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import mpmath
import numpy as np

from .arith import EXTENDED_DPS, is_exact, to_mpf
from .errors import ParamError
from .recurrence import (
    ScalingSequence,
    _sigma_callable,
    eval_polys,
    normalize,
)

__all__ = [
    "TuranEntry",
    "GridInfo",
    "TuranReport",
    "turan_det",
    "scan_grid",
    "grid_scan",
    "scaled_scan",
]

DEFAULT_GRID_POINTS = 2001
DEFAULT_TOLERANCE = 1e-12
CONFIRM_BAND = 1e-10


def turan_det(family, n: int, x, normalized: bool = True, dps: int | None = None):
    """Delta_n at a single point; n >= 1.

    normalized=True (default) rescales the family so p_k(1) = 1 first, which
    is the setting in which the nonnegativity criteria live. The arithmetic
    mode follows eval_polys (exact for exact family + rational x, else float,
    or mpmath when dps is given).
    """
    if n < 1:
        raise ParamError("turan_det needs n >= 1")
    fam = normalize(family, n + 1) if normalized else family
    p = eval_polys(fam, n + 1, x, dps=dps)
    return p[n] * p[n] - p[n - 1] * p[n + 1]


def scan_grid(points: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    """Sorted union of a uniform mesh and Chebyshev nodes on [-1, 1].

    Both halves contain the endpoints, which are deliberately kept duplicated
    so the scan always evaluates exactly 2*points abscissas.
    """
    if points < 3:
        raise ParamError("grid needs at least 3 points")
    uniform = np.linspace(-1.0, 1.0, points)
    cheb = np.cos(np.pi * np.arange(points) / (points - 1))
    return np.sort(np.concatenate([uniform, cheb]))


@dataclass(frozen=True)
class TuranEntry:
    n: int
    min_value: float
    argmin_x: float
    nonnegative: bool


@dataclass(frozen=True)
class GridInfo:
    kind: str
    points: int


@dataclass(frozen=True)
class TuranReport:
    """Scan result: per-degree grid minima, ordered by n.

    min_value/argmin_x are raw double-precision grid values (bit-identical to
    turan_det at the same point in float mode); the nonnegative verdict may
    additionally rely on an extended-precision confirmation when the minimum
    fell inside the near-zero band.
    """

    n_range: tuple[int, int]
    grid: GridInfo
    per_n: tuple[TuranEntry, ...]
    tolerance: float
    sigma_log_concave: bool | None = None
    notes: dict = field(default_factory=dict)

    @property
    def all_nonnegative(self) -> bool:
        return all(e.nonnegative for e in self.per_n)

    def entry(self, n: int) -> TuranEntry:
        lo, hi = self.n_range
        if not lo <= n <= hi:
            raise KeyError(n)
        return self.per_n[n - lo]

    def to_json(self):
        out = {
            "n_range": list(self.n_range),
            "grid": {"kind": self.grid.kind, "points": self.grid.points},
            "tolerance": self.tolerance,
            "all_nonnegative": self.all_nonnegative,
            "per_n": [
                {"n": e.n, "min_value": e.min_value, "argmin_x": e.argmin_x,
                 "nonnegative": e.nonnegative}
                for e in self.per_n
            ],
        }
        if self.sigma_log_concave is not None:
            out["sigma_log_concave"] = self.sigma_log_concave
        if self.notes:
            out["notes"] = dict(self.notes)
        return out

    def csv_rows(self):
        yield ["n", "x_min", "delta_min", "nonnegative"]
        for e in self.per_n:
            yield [e.n, repr(e.argmin_x), repr(e.min_value), e.nonnegative]


def _coeff_lists(fam, hi: int):
    """Coefficients 0..hi once, as given (Fractions stay exact for reuse)."""
    al = [fam.alpha(n) for n in range(hi + 1)]
    ga = [fam.gamma(n) for n in range(hi + 1)]
    return al, ga


def _poly_table(al_f: np.ndarray, ga_f: np.ndarray, xs: np.ndarray, n_hi: int) -> np.ndarray:
    P = np.empty((n_hi + 1, xs.size))
    P[0] = 1.0
    if n_hi >= 1:
        P[1] = xs / ga_f[0]
    for n in range(1, n_hi):
        P[n + 1] = (xs * P[n] - al_f[n] * P[n - 1]) / ga_f[n]
    return P


def _confirm_at(al_src, ga_src, x: float, degrees: Sequence[int], dps: int,
                sigma_src=None) -> dict:
    """Recompute Delta_n (optionally sigma-scaled) at one x in mpmath."""
    hi = max(degrees) + 1
    out = {}
    with mpmath.workdps(dps):
        xm = mpmath.mpf(x)
        p = [mpmath.mpf(1)]
        if hi >= 1:
            p.append(xm / to_mpf(ga_src[0]))
        for n in range(1, hi):
            p.append((xm * p[n] - to_mpf(al_src[n]) * p[n - 1]) / to_mpf(ga_src[n]))
        if sigma_src is not None:
            s = [to_mpf(sigma_src[n]) for n in range(hi + 1)]
            p = [s[n] * p[n] for n in range(hi + 1)]
        for n in degrees:
            out[n] = p[n] * p[n] - p[n - 1] * p[n + 1]
    return out


def _scan_table(P: np.ndarray, xs: np.ndarray, n_max: int, tolerance: float,
                al_src, ga_src, sigma_src=None, confirm_dps: int = EXTENDED_DPS):
    """Shared minima/verdict pass over a ready polynomial table."""
    mins, args, scales = [], [], []
    for n in range(1, n_max + 1):
        D = P[n] * P[n] - P[n - 1] * P[n + 1]
        i = int(np.argmin(D))
        mins.append(float(D[i]))
        args.append(float(xs[i]))
        scales.append(max(1.0, float(np.max(np.abs(D)))))

    # group the near-zero minima by abscissa: one high-precision sweep per x
    pending: dict[float, list[int]] = {}
    for k, n in enumerate(range(1, n_max + 1)):
        if abs(mins[k]) < CONFIRM_BAND * scales[k]:
            pending.setdefault(args[k], []).append(n)
    confirmed: dict[int, float] = {}
    for x, degrees in pending.items():
        vals = _confirm_at(al_src, ga_src, x, degrees, confirm_dps, sigma_src)
        for n, v in vals.items():
            confirmed[n] = float(v)

    entries = []
    for k, n in enumerate(range(1, n_max + 1)):
        effective = confirmed.get(n, mins[k])
        entries.append(TuranEntry(
            n=n, min_value=mins[k], argmin_x=args[k],
            nonnegative=bool(effective >= -tolerance * scales[k]),
        ))
    return tuple(entries)


def grid_scan(family, n_max: int, grid_points: int = DEFAULT_GRID_POINTS,
              normalized: bool = True, tolerance: float = DEFAULT_TOLERANCE,
              confirm_dps: int = EXTENDED_DPS) -> TuranReport:
    """Scan Delta_1..Delta_{n_max} over the uniform+Chebyshev grid.

    Verdict per degree: grid minimum >= -tolerance*scale_n with
    scale_n = max(1, max|Delta_n| on the grid); minima inside the
    1e-10*scale_n band are re-evaluated at 50 digits before the verdict.
    """
    if n_max < 1:
        raise ParamError("grid_scan needs n_max >= 1")
    fam = normalize(family, n_max + 1) if normalized else family
    xs = scan_grid(grid_points)
    al_src, ga_src = _coeff_lists(fam, n_max)
    al_f = np.array([float(v) for v in al_src])
    ga_f = np.array([float(v) for v in ga_src])
    P = _poly_table(al_f, ga_f, xs, n_max + 1)
    entries = _scan_table(P, xs, n_max, tolerance, al_src, ga_src,
                          confirm_dps=confirm_dps)
    return TuranReport(
        n_range=(1, n_max),
        grid=GridInfo("uniform+chebyshev", int(xs.size)),
        per_n=entries,
        tolerance=tolerance,
    )


def scaled_scan(family, sigma, n_max: int, grid_points: int = DEFAULT_GRID_POINTS,
                tolerance: float = DEFAULT_TOLERANCE,
                confirm_dps: int = EXTENDED_DPS) -> TuranReport:
    """Scan the sigma-scaled determinants (sigma_n*P_n)^2 - (sigma_{n-1}P_{n-1})(sigma_{n+1}P_{n+1}).

    Requires an already normalized family (alpha_n + gamma_n = 1); raises
    ParamError otherwise. The report carries sigma_log_concave: when the
    unscaled determinants are nonnegative, log-concavity of sigma is exactly
    the condition for the scaled ones to stay nonnegative.
    """
    if n_max < 1:
        raise ParamError("scaled_scan needs n_max >= 1")
    al_src, ga_src = _coeff_lists(family, n_max)
    for n in range(n_max + 1):
        s = al_src[n] + ga_src[n]
        ok = (s == 1) if is_exact(s) else abs(float(s) - 1.0) <= 1e-12
        if not ok:
            raise ParamError(
                f"scaled_scan needs a normalized family (alpha_{n} + gamma_{n} = {s}); "
                "pass normalize(family, N) first")

    sfn = _sigma_callable(sigma)
    sigma_src = [sfn(n) for n in range(n_max + 2)]
    if any(not v > 0 for v in sigma_src):
        raise ParamError("scaling values must be positive")
    log_concave = ScalingSequence(sfn).log_concave_up_to(n_max)

    xs = scan_grid(grid_points)
    al_f = np.array([float(v) for v in al_src])
    ga_f = np.array([float(v) for v in ga_src])
    P = _poly_table(al_f, ga_f, xs, n_max + 1)
    s_f = np.array([float(v) for v in sigma_src])
    S = P * s_f[:, None]
    entries = _scan_table(S, xs, n_max, tolerance, al_src, ga_src,
                          sigma_src=sigma_src, confirm_dps=confirm_dps)
    return TuranReport(
        n_range=(1, n_max),
        grid=GridInfo("uniform+chebyshev", int(xs.size)),
        per_n=entries,
        tolerance=tolerance,
        sigma_log_concave=log_concave,
    )
