"""Builders for the named coefficient families, plus classification dispatch.

Every builder returns an exact CoefficientFamily (Fraction coefficients).
Families whose coefficients follow the shifted-constant shape
alpha_n = 1/2 - A*delta_n, gamma_n = 1/2 + G*delta_n carry that shape in
``meta`` so classify can run the matching corollary checker.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .arith import Num, close_to, is_exact, to_fraction
from .criteria import (
    COROLLARY1,
    COROLLARY2,
    LAMBDA_ROUTE,
    SZW_THEOREM1,
    THEOREM1,
    THEOREM1_HYPOTHESES,
    Y_ROUTE,
    DeltaSeq,
    Verdict,
    as_delta,
    check_corollary1,
    check_corollary2,
    check_lambda_route,
    check_szw_normalized,
    check_theorem1,
    check_y_route,
)
from .errors import InvalidLambda, NonpositiveRatio, ParamError, TableRangeError
from .recurrence import CoefficientFamily, normalize

__all__ = [
    "FAMILY_KINDS",
    "FAMILY_INFO",
    "FamilySpec",
    "CorollaryShape",
    "build",
    "chebyshev_t",
    "chebyshev_u",
    "legendre",
    "gegenbauer",
    "pollaczek",
    "example2",
    "example3",
    "example4",
    "table_family",
    "corollary1_family",
    "corollary2_family",
    "classify",
]

FAMILY_KINDS = (
    "ChebyshevT", "ChebyshevU", "Legendre", "Gegenbauer", "Pollaczek",
    "Example2", "Example3", "Example4", "Table",
)

FAMILY_INFO: Mapping[str, Mapping[str, str]] = {
    "ChebyshevT": {"params": "none", "constraints": "none (gamma_0 = 1, alpha_n = gamma_n = 1/2)"},
    "ChebyshevU": {"params": "none", "constraints": "none (normalized at 1)"},
    "Legendre": {"params": "none", "constraints": "none (normalized at 1)"},
    "Gegenbauer": {"params": "lambda", "constraints": "lambda > 0 (normalized at 1)"},
    "Pollaczek": {"params": "lambda, a", "constraints": "lambda > 0, a > 0"},
    "Example2": {
        "params": "eps, delta (sequence specs), optional delta0",
        "constraints": "eps strictly decreasing > 0, delta nonincreasing >= 0 for n >= 1, "
                       "eps_0*(1 + delta_0) = 1/6",
    },
    "Example3": {"params": "a", "constraints": "a > 0"},
    "Example4": {"params": "a, b", "constraints": "a > 0, b >= 0"},
    "Table": {"params": "alpha, gamma lists", "constraints": "alpha_0 = 0, alpha_n > 0 (n >= 1), gamma_n > 0"},
}


@dataclass(frozen=True)
class CorollaryShape:
    """Constants and delta sequence of the shifted-constant coefficient shape."""

    alpha_const: Num
    gamma_const: Num
    delta: DeltaSeq


@dataclass(frozen=True)
class FamilySpec:
    """Serializable family description (CLI/JSON entry point)."""

    kind: str
    params: Mapping[str, object] = None  # type: ignore[assignment]
    table: tuple[Sequence, Sequence] | None = None

    def __post_init__(self):
        if self.params is None:
            object.__setattr__(self, "params", {})
        if self.kind not in FAMILY_KINDS:
            raise ParamError(f"unknown family kind {self.kind!r}; known: {', '.join(FAMILY_KINDS)}")

    @classmethod
    def from_json(cls, obj) -> "FamilySpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ParamError("family spec must be an object with a 'kind' field")
        kind = obj["kind"]
        table = None
        if kind == "Table":
            if "alpha" not in obj or "gamma" not in obj:
                raise ParamError("Table spec needs 'alpha' and 'gamma' lists")
            table = (list(obj["alpha"]), list(obj["gamma"]))
        return cls(kind=kind, params=dict(obj.get("params", {})), table=table)

    def to_json(self):
        out: dict = {"kind": self.kind}
        if self.params:
            out["params"] = {k: v for k, v in self.params.items()}
        if self.table is not None:
            out["alpha"] = list(self.table[0])
            out["gamma"] = list(self.table[1])
        return out


def chebyshev_t() -> CoefficientFamily:
    half = Fraction(1, 2)
    return CoefficientFamily(
        name="ChebyshevT",
        alpha=lambda n: Fraction(0) if n == 0 else half,
        gamma=lambda n: Fraction(1) if n == 0 else half,
    )


def chebyshev_u() -> CoefficientFamily:
    return CoefficientFamily(
        name="ChebyshevU",
        alpha=lambda n: Fraction(n, 2 * (n + 1)),
        gamma=lambda n: Fraction(n + 2, 2 * (n + 1)),
    )


def legendre() -> CoefficientFamily:
    return CoefficientFamily(
        name="Legendre",
        alpha=lambda n: Fraction(n, 2 * n + 1),
        gamma=lambda n: Fraction(n + 1, 2 * n + 1),
    )


def gegenbauer(lam) -> CoefficientFamily:
    lam = to_fraction(lam)
    if not lam > 0:
        raise ParamError(f"Gegenbauer needs lambda > 0 (got {lam})")
    return CoefficientFamily(
        name="Gegenbauer",
        alpha=lambda n, _l=lam: n / (2 * (n + _l)),
        gamma=lambda n, _l=lam: (n + 2 * _l) / (2 * (n + _l)),
        params={"lambda": lam},
    )


def pollaczek(lam, a) -> CoefficientFamily:
    """alpha_n = n/(2(n+lambda+a)), gamma_n = (n+2*lambda)/(2(n+lambda+a))."""
    lam, a = to_fraction(lam), to_fraction(a)
    if not lam > 0:
        raise ParamError(f"Pollaczek needs lambda > 0 (got {lam})")
    if not a > 0:
        raise ParamError(f"Pollaczek needs a > 0 (got {a})")
    meta: dict = {}
    if lam > a:
        meta["corollary1"] = CorollaryShape(
            alpha_const=lam + a,
            gamma_const=lam - a,
            delta=DeltaSeq(lambda n, _s=lam + a: 1 / (2 * (n + _s)), limit=0),
        )
    else:
        meta["unchecked"] = ("a >= lambda branch: covered by a prior criterion "
                             "not implemented here")
    return CoefficientFamily(
        name="Pollaczek",
        alpha=lambda n, _s=lam + a: n / (2 * (n + _s)),
        gamma=lambda n, _l=lam, _s=lam + a: (n + 2 * _l) / (2 * (n + _s)),
        params={"lambda": lam, "a": a},
        meta=meta,
    )


def example3(a) -> CoefficientFamily:
    """alpha_n = 1/2 - a/(2(n+a)), gamma_n = 1/2 + a/(2(n+a+1))."""
    a = to_fraction(a)
    if not a > 0:
        raise ParamError(f"Example3 needs a > 0 (got {a})")
    half = Fraction(1, 2)
    return CoefficientFamily(
        name="Example3",
        alpha=lambda n, _a=a: half - _a / (2 * (n + _a)),
        gamma=lambda n, _a=a: half + _a / (2 * (n + _a + 1)),
        params={"a": a},
    )


def example4(a, b) -> CoefficientFamily:
    """alpha_n as in example3; gamma_n = 1/2 + a/(2(n+a+b+1))."""
    a, b = to_fraction(a), to_fraction(b)
    if not a > 0:
        raise ParamError(f"Example4 needs a > 0 (got {a})")
    if b < 0:
        raise ParamError(f"Example4 needs b >= 0 (got {b})")
    half = Fraction(1, 2)
    return CoefficientFamily(
        name="Example4",
        alpha=lambda n, _a=a: half - _a / (2 * (n + _a)),
        gamma=lambda n, _a=a, _b=b: half + _a / (2 * (n + _a + _b + 1)),
        params={"a": a, "b": b},
    )


_PROBE = 8  # indices sampled when validating user-supplied sequences


def example2(eps, delta, delta0=None) -> CoefficientFamily:
    """alpha_n = 1/2 - 3*eps_n*(1+delta_n), gamma_n = 1/2 + eps_n.

    ``eps`` must decrease strictly to 0 and ``delta`` (used for n >= 1) must be
    nonincreasing with limit >= 0. delta_0 is pinned by the normalization
    constraint eps_0*(1 + delta_0) = 1/6: derived when omitted, verified when
    given. That constraint is exactly alpha_0 = 0.
    """
    eps_seq = as_delta(eps)
    tail = as_delta(delta)
    e0 = eps_seq(0)
    if not 0 < e0 <= Fraction(1, 6):
        raise ParamError(f"Example2 needs 0 < eps_0 <= 1/6 so that delta_0 >= 0 (got {e0})")
    exact = is_exact(e0) and (delta0 is None or is_exact(delta0))
    if delta0 is None:
        sixth = Fraction(1, 6) if is_exact(e0) else 1 / 6
        delta0 = sixth / e0 - 1
    else:
        prod = e0 * (1 + delta0)
        target = Fraction(1, 6) if exact else 1 / 6
        if not close_to(prod, target, exact):
            raise ParamError(
                f"Example2 needs eps_0*(1 + delta_0) = 1/6 (got {prod})")

    def delta_at(n: int, _d0=delta0, _t=tail):
        return _d0 if n == 0 else _t(n)

    # probe the user sequences for the declared monotonicity
    prev_e = e0
    prev_d = None
    for n in range(1, _PROBE + 1):
        try:
            en, dn = eps_seq(n), tail(n)
        except TableRangeError:
            break
        if not 0 < en < prev_e:
            raise ParamError(f"Example2 eps must decrease strictly through positive values "
                             f"(eps_{n} = {en} after {prev_e})")
        if dn < 0 or (prev_d is not None and dn > prev_d):
            raise ParamError(f"Example2 delta must be nonincreasing and >= 0 for n >= 1 "
                             f"(delta_{n} = {dn})")
        prev_e, prev_d = en, dn

    half = Fraction(1, 2) if exact else 0.5
    zero = Fraction(0) if exact else 0.0
    return CoefficientFamily(
        name="Example2",
        alpha=lambda n, _e=eps_seq, _d=delta_at, _h=half, _z=zero:
            _z if n == 0 else _h - 3 * _e(n) * (1 + _d(n)),
        gamma=lambda n, _e=eps_seq, _h=half: _h + _e(n),
        exact=exact,
        params={"eps0": e0, "delta0": delta0},
    )


def table_family(alphas: Sequence, gammas: Sequence, name: str = "Table") -> CoefficientFamily:
    """Finite coefficient tables; indices past the end raise TableRangeError."""
    if len(alphas) != len(gammas):
        raise ParamError(f"alpha and gamma tables differ in length ({len(alphas)} vs {len(gammas)})")
    if not alphas:
        raise ParamError("empty coefficient table")
    exact = not any(isinstance(v, float) for v in list(alphas) + list(gammas))
    if exact:
        al = tuple(to_fraction(v) for v in alphas)
        ga = tuple(to_fraction(v) for v in gammas)
    else:
        al = tuple(float(v) if isinstance(v, float) else float(to_fraction(v)) for v in alphas)
        ga = tuple(float(v) if isinstance(v, float) else float(to_fraction(v)) for v in gammas)
    if al[0] != 0:
        raise ParamError(f"alpha_0 must be 0 by convention (got {al[0]})")
    for n, v in enumerate(al[1:], start=1):
        if not v > 0:
            raise ParamError(f"alpha_{n} must be positive (got {v})")
    for n, v in enumerate(ga):
        if not v > 0:
            raise ParamError(f"gamma_{n} must be positive (got {v})")

    def at(table):
        def fn(n: int, _t=table):
            if not 0 <= n < len(_t):
                raise TableRangeError(n, len(_t))
            return _t[n]
        return fn

    return CoefficientFamily(name=name, alpha=at(al), gamma=at(ga), exact=exact,
                             params={"length": len(al)})


def corollary1_family(alpha_const, gamma_const, delta, name: str = "shape1") -> CoefficientFamily:
    """Family of the exact shape alpha_n = 1/2 - A*delta_n, gamma_n = 1/2 + G*delta_n.

    Requires A*delta_0 = 1/2 (that is alpha_0 = 0)."""
    d = as_delta(delta)
    exact = is_exact(alpha_const) and is_exact(gamma_const) and is_exact(d(0))
    half = Fraction(1, 2) if exact else 0.5
    prod = alpha_const * d(0)
    if not close_to(prod, half, exact):
        raise ParamError(f"need alpha_const*delta_0 = 1/2 for alpha_0 = 0 (got {prod})")
    return CoefficientFamily(
        name=name,
        alpha=lambda n, _A=alpha_const, _d=d, _h=half: _h - _A * _d(n),
        gamma=lambda n, _G=gamma_const, _d=d, _h=half: _h + _G * _d(n),
        exact=exact,
        params={"alpha_const": alpha_const, "gamma_const": gamma_const},
        meta={"corollary1": CorollaryShape(alpha_const, gamma_const, d)},
    )


def corollary2_family(alpha_const, gamma_const, delta, name: str = "shape2") -> CoefficientFamily:
    """Same shape but alpha_0 pinned to 0 (no constraint tying delta_0 to A)."""
    d = as_delta(delta)
    exact = is_exact(alpha_const) and is_exact(gamma_const) and is_exact(d(0))
    half = Fraction(1, 2) if exact else 0.5
    zero = Fraction(0) if exact else 0.0
    return CoefficientFamily(
        name=name,
        alpha=lambda n, _A=alpha_const, _d=d, _h=half, _z=zero:
            _z if n == 0 else _h - _A * _d(n),
        gamma=lambda n, _G=gamma_const, _d=d, _h=half: _h + _G * _d(n),
        exact=exact,
        params={"alpha_const": alpha_const, "gamma_const": gamma_const},
        meta={"corollary2": CorollaryShape(alpha_const, gamma_const, d)},
    )


def _seq_from_spec(obj, role: str) -> DeltaSeq:
    """Sequence spec: geometric/harmonic closed forms or explicit tables."""
    if isinstance(obj, (list, tuple)):
        return DeltaSeq.from_values([to_fraction(v) for v in obj])
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParamError(f"{role}: sequence spec must be a list or an object with 'kind'")
    kind = obj["kind"]
    if kind == "geometric":
        first = to_fraction(obj.get("first", 1))
        ratio = to_fraction(obj.get("ratio", Fraction(1, 2)))
        if not first > 0 or not 0 < ratio < 1:
            raise ParamError(f"{role}: geometric needs first > 0 and 0 < ratio < 1")
        return DeltaSeq(lambda n, _f=first, _r=ratio: _f * _r ** n, limit=0)
    if kind == "harmonic":
        scale = to_fraction(obj.get("scale", 1))
        shift = to_fraction(obj.get("shift", 0))
        if not scale > 0 or shift < 0:
            raise ParamError(f"{role}: harmonic needs scale > 0 and shift >= 0")

        def at(n: int, _s=scale, _h=shift):
            if n + _h == 0:
                raise ParamError(f"{role}: harmonic term undefined at n = {n} with shift {_h}")
            return _s / (n + _h)

        return DeltaSeq(at, limit=0)
    if kind == "table":
        return DeltaSeq.from_values([to_fraction(v) for v in obj.get("values", [])])
    raise ParamError(f"{role}: unknown sequence kind {kind!r}")


def build(spec: FamilySpec) -> CoefficientFamily:
    """Construct the family a FamilySpec describes (ParamError on bad input)."""
    kind, p = spec.kind, dict(spec.params)

    def take(*names, required=()):
        unknown = set(p) - set(names)
        if unknown:
            raise ParamError(f"{kind}: unexpected params {sorted(unknown)}")
        for r in required:
            if r not in p:
                raise ParamError(f"{kind}: missing required param {r!r}")

    if kind == "ChebyshevT":
        take()
        return chebyshev_t()
    if kind == "ChebyshevU":
        take()
        return chebyshev_u()
    if kind == "Legendre":
        take()
        return legendre()
    if kind == "Gegenbauer":
        take("lambda", required=("lambda",))
        return gegenbauer(p["lambda"])
    if kind == "Pollaczek":
        take("lambda", "a", required=("lambda", "a"))
        return pollaczek(p["lambda"], p["a"])
    if kind == "Example2":
        take("eps", "delta", "delta0", required=("eps", "delta"))
        d0 = to_fraction(p["delta0"]) if "delta0" in p else None
        return example2(_seq_from_spec(p["eps"], "eps"),
                        _seq_from_spec(p["delta"], "delta"), d0)
    if kind == "Example3":
        take("a", required=("a",))
        return example3(p["a"])
    if kind == "Example4":
        take("a", "b", required=("a", "b"))
        return example4(p["a"], p["b"])
    if kind == "Table":
        take("name")
        if spec.table is None:
            raise ParamError("Table spec needs alpha/gamma lists")
        return table_family(spec.table[0], spec.table[1], name=p.get("name", "Table"))
    raise ParamError(f"unknown family kind {kind!r}")


def classify(family, N: int) -> list[str]:
    """Names of the criteria whose checkers certify the family up to N.

    Routes (lambda/y) only certify together with the non-step conditions of
    the main criterion, so they are gated on those; a corollary checker runs
    only when the family carries the matching structural shape.
    """
    if N < 2:
        raise ParamError("classify needs N >= 2")
    out = []
    t1 = check_theorem1(family, N)
    if t1.overall is Verdict.SATISFIED:
        out.append(THEOREM1)
    hyp_ok = all(t1.condition(lbl).holds is True for lbl in THEOREM1_HYPOTHESES)

    try:
        if check_szw_normalized(normalize(family, N), N).overall is Verdict.SATISFIED:
            out.append(SZW_THEOREM1)
    except NonpositiveRatio:
        pass

    shape = family.meta.get("corollary1")
    if shape is not None:
        rep = check_corollary1(shape.alpha_const, shape.gamma_const, shape.delta, N,
                               family=family)
        if rep.overall is Verdict.SATISFIED:
            out.append(COROLLARY1)
    shape = family.meta.get("corollary2")
    if shape is not None:
        rep = check_corollary2(shape.alpha_const, shape.gamma_const, shape.delta, N,
                               family=family)
        if rep.overall is Verdict.SATISFIED:
            out.append(COROLLARY2)

    if hyp_ok:
        if check_lambda_route(family, N).overall is Verdict.SATISFIED:
            out.append(LAMBDA_ROUTE)
        try:
            if check_y_route(family, N).overall is Verdict.SATISFIED:
                out.append(Y_ROUTE)
        except InvalidLambda:
            pass
    return out
