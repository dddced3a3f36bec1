"""Identity catalogue and verification reports.

Every case binds a left and a right evaluator over a small grid plus
an absolute tolerance.  verify() walks the grid without early abort:
an evaluator exception becomes a failing point with the reason noted.
verify_all() runs the whole catalogue and assembles a single report
ordered by case id.
"""
from __future__ import annotations

import functools
import math
import time
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Tuple

import numpy as np

from .extrapolate import neville_zero
from .hurwitz import HurwitzQuery, hurwitz_zeta, pole_residue_check
from .regsum import (
    TrigSeriesSpec,
    alternating_log_limit,
    closed_form,
    deninger_cos_log_sum,
    kummer_sine_series,
    log_sine_fourier,
    log_sine_fourier_target,
    regularized_limit,
    trig_dirichlet_sum,
)
from .result import DomainError, EvalResult
from .special import EULER_GAMMA, digamma, log_gamma
from .stieltjes import (
    StieltjesQuery,
    gamma1_reflection_diff,
    integral_gamma,
    stieltjes_gamma,
)

LN_2PI = math.log(2.0 * math.pi)

# Fixed grids shared by several cases.
S_ORACLE = (-2.0, -1.0, -0.5, 0.5, 2.0, 3.0)
X_ORACLE = (0.1, 0.25, 0.5, 1.0, 2.0)
S_FOURIER = (-2.0, -1.0, -0.5, 0.25, 0.5)
X_EXTRAS = (0.25, 1.0 / 3.0, 0.75)

_QUAD_DELTA = 1e-6
_GL16 = np.polynomial.legendre.leggauss(16)
_GL24 = np.polynomial.legendre.leggauss(24)

Point = Mapping[str, float]
Evaluator = Callable[[Point], float]

DOMAIN_KINDS = ("x-default", "u-default", "x-fixed", "sx-grid", "sm-grid", "scalar")


def uniform_x(grid_density: int) -> Tuple[float, ...]:
    """Interior grid k/(g+1), k = 1..g; density 9 gives 0.1 .. 0.9."""
    if grid_density < 3:
        raise DomainError(f"grid_density must be >= 3, got {grid_density}")
    return tuple(k / (grid_density + 1.0) for k in range(1, grid_density + 1))

def default_x_grid(grid_density: int) -> Tuple[float, ...]:
    """Uniform grid, widened by {1/4, 1/3, 3/4} at the default density.

    The extra points exercise symmetric and rational-angle phases; they
    are pinned to density 9 so that an explicit --grid request yields
    exactly the requested number of points.
    """
    pts = list(uniform_x(grid_density))
    if grid_density == 9:
        pts.extend(X_EXTRAS)
    return tuple(sorted(pts))


@dataclass(frozen=True)
class Domain:
    """Grid recipe for one case.

    kind selects how points are produced; `values` holds fixed
    coordinates for x-fixed and sx/sm kinds (or the scalar annotation),
    and `s_values` the s-axis of the product kinds.  Product kinds with
    empty `values` draw their x-axis from uniform_x(grid_density).
    """

    kind: str
    label: str = "x"
    values: Tuple[float, ...] = ()
    s_values: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in DOMAIN_KINDS:
            raise DomainError(f"unknown domain kind {self.kind!r}")

    def points(self, grid_density: int) -> Tuple[Tuple[Tuple[str, float], ...], ...]:
        if self.kind == "scalar":
            if self.values:
                return (((self.label, self.values[0]),),)
            return ((),)
        if self.kind in ("x-default", "u-default"):
            return tuple(((self.label, v),) for v in default_x_grid(grid_density))
        if self.kind == "x-fixed":
            return tuple(((self.label, v),) for v in self.values)
        if self.kind == "sx-grid":
            xs = self.values if self.values else uniform_x(grid_density)
            return tuple((("s", s), ("x", x)) for s in self.s_values for x in xs)
        return tuple((("s", s), ("m", m)) for s in self.s_values for m in (0, 1, 2))


@dataclass(frozen=True)
class IdentityCase:
    id: str
    lhs: Evaluator
    rhs: Evaluator
    domain: Domain
    tol: float
    notes: str
    residual_fn: Optional[Evaluator] = None

    def __post_init__(self) -> None:
        if not 1e-12 <= self.tol <= 1e-5:
            raise DomainError(f"tol must lie in [1e-12, 1e-5], got {self.tol}")


@dataclass(frozen=True)
class PointRecord:
    coords: Tuple[Tuple[str, float], ...]
    lhs: Optional[float]
    rhs: Optional[float]
    residual: Optional[float]
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    points: Tuple[PointRecord, ...]
    max_residual: Optional[float]
    passed: bool
    tol: float


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated outcome; wall_time is informational and is not part
    of any serialized form, so repeated runs emit identical bytes."""

    cases: Tuple[CaseResult, ...]
    cases_run: int
    cases_passed: int
    max_residual: Optional[float]
    wall_time: float


def _cot(t: float) -> float:
    return math.cos(t) / math.sin(t)


def _zeta(s: float, x: float, m: int = 0) -> float:
    return hurwitz_zeta(HurwitzQuery(s, x, m)).value


def _gamma1(x: float) -> float:
    return stieltjes_gamma(StieltjesQuery(1, x)).value


# ---------------------------------------------------------------------------
# evaluators


def _lhs_residue(pt: Point) -> float:
    return pole_residue_check(pt["x"])


def _rhs_one(pt: Point) -> float:
    return 1.0


def _rhs_zero(pt: Point) -> float:
    return 0.0


def _lhs_gamma0_laurent(pt: Point) -> float:
    # Limit of zeta(1+h, x) - 1/h as h -> 0, which is the constant
    # Laurent coefficient at the pole.
    x = pt["x"]
    hs, vs = [], []
    h = 0.25
    for _ in range(7):
        hs.append(h)
        vs.append(_zeta(1.0 + h, x) - 1.0 / h)
        h *= 0.5
    return neville_zero(hs, vs)[0]


def _rhs_gamma0_series(pt: Point) -> float:
    return stieltjes_gamma(StieltjesQuery(0, pt["x"])).value


def _lhs_shift(pt: Point) -> float:
    return _zeta(pt["s"], 1.0 + pt["x"]) - _zeta(pt["s"], pt["x"])


def _rhs_shift(pt: Point) -> float:
    return -pt["x"] ** -pt["s"]


def _lhs_gamma1_shift(pt: Point) -> float:
    return _gamma1(1.0 + pt["x"]) - _gamma1(pt["x"])


def _rhs_gamma1_shift(pt: Point) -> float:
    return -math.log(pt["x"]) / pt["x"]


def _lhs_gamma0_shift(pt: Point) -> float:
    x = pt["x"]
    return (
        stieltjes_gamma(StieltjesQuery(0, x)).value
        - stieltjes_gamma(StieltjesQuery(0, 1.0 + x)).value
    )


def _rhs_inv_x(pt: Point) -> float:
    return 1.0 / pt["x"]


def _lhs_lerch(pt: Point) -> float:
    return _zeta(0.0, pt["x"], 1)


def _rhs_lerch(pt: Point) -> float:
    return log_gamma(pt["x"]) - 0.5 * LN_2PI


def _lhs_integral_gamma1(pt: Point) -> float:
    return integral_gamma(1, pt["u"]).value


def _lhs_gamma1_quadrature(pt: Point) -> float:
    nodes, weights = _GL24
    terms = [
        0.5 * w * _gamma1(1.5 + 0.5 * t) for t, w in zip(nodes.tolist(), weights.tolist())
    ]
    return math.fsum(terms)


def _rhs_integral_gamma1(pt: Point) -> float:
    return integral_gamma(1, 2.0).value


def _fourier_prefactor(s: float) -> float:
    return 4.0 * math.exp(log_gamma(1.0 - s))


def _lhs_eq44(pt: Point) -> float:
    s, x = pt["s"], pt["x"]
    return _zeta(s, x) + _zeta(s, 1.0 - x)


def _rhs_eq44(pt: Point) -> float:
    s, x = pt["s"], pt["x"]
    c = trig_dirichlet_sum(
        TrigSeriesSpec(x=x, trig="cosine", weight="unit", s=s, scale="two_pi_n_power")
    ).value
    return _fourier_prefactor(s) * math.sin(0.5 * math.pi * s) * c


def _lhs_eq45(pt: Point) -> float:
    s, x = pt["s"], pt["x"]
    return _zeta(s, x) - _zeta(s, 1.0 - x)


def _rhs_eq45(pt: Point) -> float:
    s, x = pt["s"], pt["x"]
    c = trig_dirichlet_sum(
        TrigSeriesSpec(x=x, trig="sine", weight="unit", s=s, scale="two_pi_n_power")
    ).value
    return _fourier_prefactor(s) * math.cos(0.5 * math.pi * s) * c


def _lhs_eq41(pt: Point) -> float:
    return regularized_limit(pt["x"], "sine", "unit").value


def _rhs_eq41(pt: Point) -> float:
    return closed_form(pt["x"], "4.1")


def _lhs_eq414(pt: Point) -> float:
    return regularized_limit(pt["x"], "cosine", "unit").value


def _rhs_eq414(pt: Point) -> float:
    return closed_form(pt["x"], "4.14")


@functools.lru_cache(maxsize=None)
def _complex_limit_pair(x: float) -> Tuple[complex, complex]:
    lhs = complex(
        regularized_limit(x, "cosine", "unit").value,
        regularized_limit(x, "sine", "unit").value,
    )
    rhs = complex(closed_form(x, "4.3re"), closed_form(x, "4.3im"))
    return lhs, rhs


def _lhs_eq414c(pt: Point) -> float:
    return abs(_complex_limit_pair(pt["x"])[0])


def _rhs_eq414c(pt: Point) -> float:
    return abs(_complex_limit_pair(pt["x"])[1])


def _res_eq414c(pt: Point) -> float:
    lhs, rhs = _complex_limit_pair(pt["x"])
    return abs(lhs - rhs)


def _lhs_gamma1_diff(pt: Point) -> float:
    return gamma1_reflection_diff(pt["x"]).value


def _rhs_eq48(pt: Point) -> float:
    x = pt["x"]
    lim = regularized_limit(x, "sine", "log_n").value
    return 2.0 * math.pi * lim + math.pi * (EULER_GAMMA + LN_2PI) * _cot(math.pi * x)


def _rhs_eq4101(pt: Point) -> float:
    lim = regularized_limit(pt["x"], "sine", "gamma_plus_log_2pi_n").value
    return 2.0 * math.pi * lim


def _lhs_eq412(pt: Point) -> float:
    return deninger_cos_log_sum(pt["u"]).value


def _zeta2_pair(u: float) -> float:
    return 0.5 * (_zeta(0.0, u, 2) + _zeta(0.0, 1.0 - u, 2))


def _rhs_eq412(pt: Point) -> float:
    u = pt["u"]
    return _zeta2_pair(u) + (EULER_GAMMA + LN_2PI) * math.log(2.0 * math.sin(math.pi * u))


def _lhs_eq4121(pt: Point) -> float:
    return trig_dirichlet_sum(
        TrigSeriesSpec(x=pt["u"], trig="cosine", weight="gamma_plus_log_2pi_n", s=0.0)
    ).value


def _rhs_eq4121(pt: Point) -> float:
    return _zeta2_pair(pt["u"])


def _lhs_eq413(pt: Point) -> float:
    return quadrature_zeta2_integral().value


def _lhs_eq418(pt: Point) -> float:
    lim = regularized_limit(pt["x"], "cosine", "log_n", scale="two_pi_n_power").value
    return 2.0 * lim


def _rhs_eq418(pt: Point) -> float:
    return closed_form(pt["x"], "4.18")


def _psi_via_series(x: float) -> float:
    lim = regularized_limit(x, "cosine", "log_2pi_n", scale="two_pi_n_power").value
    return 2.0 * lim - 0.5 * math.pi * _cot(math.pi * x) - EULER_GAMMA


def _lhs_eq419(pt: Point) -> float:
    return digamma(pt["x"])


def _rhs_eq419(pt: Point) -> float:
    return _psi_via_series(pt["x"])


def _lhs_eq420(pt: Point) -> float:
    x = pt["x"]
    return digamma(x) + digamma(1.0 - x)


def _rhs_eq420(pt: Point) -> float:
    lim = regularized_limit(pt["x"], "cosine", "log_2pi_n", scale="two_pi_n_power").value
    return -2.0 * EULER_GAMMA + 4.0 * lim


def _lhs_psirefl(pt: Point) -> float:
    x = pt["x"]
    return _psi_via_series(1.0 - x) - _psi_via_series(x)


def _rhs_psirefl(pt: Point) -> float:
    return math.pi * _cot(math.pi * pt["x"])


def _lhs_kummer(pt: Point) -> float:
    return kummer_sine_series(pt["x"]).value


def _rhs_kummer(pt: Point) -> float:
    x = pt["x"]
    return log_gamma(x) - log_gamma(1.0 - x) + 2.0 * EULER_GAMMA * (x - 0.5)


def _lhs_logsine(pt: Point) -> float:
    return log_sine_fourier(pt["u"]).value


def _rhs_logsine(pt: Point) -> float:
    return log_sine_fourier_target(pt["u"])


def _lhs_eq421(pt: Point) -> float:
    return regularized_limit(pt["x"], "sine", "unit", "alternating").value


def _rhs_eq421(pt: Point) -> float:
    return closed_form(pt["x"], "4.21")


def _lhs_eq422(pt: Point) -> float:
    return regularized_limit(pt["x"], "cosine", "unit", "alternating").value


def _rhs_eq422(pt: Point) -> float:
    return closed_form(pt["x"], "4.22")


def _lhs_eq423(pt: Point) -> float:
    return regularized_limit(pt["x"], "sine", "unit", "odd_only").value


def _rhs_eq423(pt: Point) -> float:
    return closed_form(pt["x"], "4.23")


def _lhs_altlog(pt: Point) -> float:
    return alternating_log_limit().value


def _rhs_altlog(pt: Point) -> float:
    return 0.5 * math.log(0.5 * math.pi)


def _lhs_halfarg(pt: Point) -> float:
    return _zeta(pt["s"], 0.5, int(pt["m"]))


def _rhs_halfarg(pt: Point) -> float:
    s, m = pt["s"], int(pt["m"])
    z = [_zeta(s, 1.0, k) for k in range(m + 1)]
    p = 2.0**s
    ln2 = math.log(2.0)
    if m == 0:
        return (p - 1.0) * z[0]
    if m == 1:
        return ln2 * p * z[0] + (p - 1.0) * z[1]
    return ln2 * ln2 * p * z[0] + 2.0 * ln2 * p * z[1] + (p - 1.0) * z[2]


# ---------------------------------------------------------------------------
# quadrature of the second s-derivative of zeta at s = 0 over u in (0, 1)


def _panel_breaks(lo: float, hi: float) -> Tuple[float, ...]:
    # Panel edges are drawn from one global ladder (geometric doubling
    # out of the left singularity, then eighths), so any split of the
    # interval integrates over the same panels as the full run.
    cuts = {lo, hi}
    b = 2.0 * _QUAD_DELTA
    while b < 0.125:
        if lo < b < hi:
            cuts.add(b)
        b *= 2.0
    for k in range(1, 8):
        e = k / 8.0
        if lo < e < hi:
            cuts.add(e)
    return tuple(sorted(cuts))


def _integral_zeta2(lo: float, hi: float) -> Tuple[float, float, int]:
    """Integral of d2/ds2 zeta(s,u) at s=0 over [lo, hi] within [0, 1].

    Endpoints at exactly 0 or 1 are handled by a width-delta analytic
    model: near 0 the integrand is ln(u)^2 plus a smooth shift term
    (integrated exactly and by the midpoint rule respectively), near 1
    a midpoint-rule strip suffices.  The interior is composite
    Gauss-Legendre of order 16.
    """
    if not 0.0 <= lo < hi <= 1.0:
        raise DomainError(f"need 0 <= lo < hi <= 1, got [{lo}, {hi}]")
    pieces: list[float] = []
    err_parts: list[float] = []
    evals = 0
    if lo == 0.0:
        d = _QUAD_DELTA
        ln_d = math.log(d)
        pieces.append(d * (ln_d * ln_d - 2.0 * ln_d + 2.0))
        shift = hurwitz_zeta(HurwitzQuery(0.0, 1.0 + 0.5 * d, 2))
        pieces.append(d * shift.value)
        err_parts.append(d * shift.err_estimate + d**3)
        evals += 1
        lo = d
    if hi == 1.0:
        d = _QUAD_DELTA
        strip = hurwitz_zeta(HurwitzQuery(0.0, 1.0 - 0.5 * d, 2))
        pieces.append(d * strip.value)
        err_parts.append(d * strip.err_estimate + d**3)
        evals += 1
        hi = 1.0 - d
    nodes, weights = _GL16
    breaks = _panel_breaks(lo, hi)
    for a, b in zip(breaks, breaks[1:]):
        half = 0.5 * (b - a)
        mid = 0.5 * (a + b)
        for t, w in zip(nodes.tolist(), weights.tolist()):
            r = hurwitz_zeta(HurwitzQuery(0.0, mid + half * t, 2))
            pieces.append(half * w * r.value)
            err_parts.append(half * w * r.err_estimate)
            evals += 1
    value = math.fsum(pieces)
    err = math.fsum(err_parts) + 1e-16 * math.fsum(abs(p) for p in pieces)
    return value, err, evals


def quadrature_zeta2_integral() -> EvalResult:
    """Integral over (0, 1) of the second s-derivative of zeta(s, u) at
    s = 0; the exact value is 0."""
    value, err, evals = _integral_zeta2(0.0, 1.0)
    return EvalResult(value=value, err_estimate=err, terms_used=evals, method_tag="gl-panels")


# ---------------------------------------------------------------------------
# catalogue


def registry() -> Tuple[IdentityCase, ...]:
    """The fixed verification catalogue, in stable order."""
    x_default = Domain("x-default")
    u_default = Domain("u-default", label="u")
    cases = (
        IdentityCase(
            id="EQ2.3",
            lhs=_lhs_residue,
            rhs=_rhs_one,
            domain=Domain("x-fixed", values=(0.5, 1.0, 3.7)),
            tol=1e-9,
            notes="Residue at the s = 1 pole: extrapolated (s-1)*zeta(s,x) equals 1 for every x.",
        ),
        IdentityCase(
            id="EQ3.9",
            lhs=_lhs_shift,
            rhs=_rhs_shift,
            domain=Domain("sx-grid", values=X_ORACLE, s_values=S_ORACLE),
            tol=1e-9,
            notes="Forward shift: zeta(s,1+x) - zeta(s,x) = -x^(-s).",
        ),
        IdentityCase(
            id="EQ3.10",
            lhs=_lhs_gamma1_shift,
            rhs=_rhs_gamma1_shift,
            domain=Domain("x-fixed", values=tuple(k / 5.0 for k in range(1, 16))),
            tol=1e-9,
            notes="Recurrence gamma1(1+x) - gamma1(x) = -ln(x)/x.",
        ),
        IdentityCase(
            id="EQ3.11",
            lhs=_lhs_gamma0_shift,
            rhs=_rhs_inv_x,
            domain=Domain(
                "x-fixed",
                values=tuple(k / 10.0 for k in range(1, 10)) + (1.5, 2.5, 5.0, 7.5, 10.0),
            ),
            tol=1e-9,
            notes="Recurrence gamma0(x) - gamma0(1+x) = 1/x, the digamma shift in disguise.",
        ),
        IdentityCase(
            id="EQ3.18",
            lhs=_lhs_lerch,
            rhs=_rhs_lerch,
            domain=x_default,
            tol=1e-9,
            notes="s-derivative of zeta at s = 0 equals ln Gamma(x) - ln(2 pi)/2.",
        ),
        IdentityCase(
            id="EQ3.20",
            lhs=_lhs_integral_gamma1,
            rhs=_rhs_zero,
            domain=Domain("scalar", label="u", values=(2.0,)),
            tol=1e-9,
            notes="integral_gamma(1, 2) vanishes: the antiderivative route gives exactly 0.",
        ),
        IdentityCase(
            id="EQ3.21",
            lhs=_lhs_gamma1_quadrature,
            rhs=_rhs_integral_gamma1,
            domain=Domain("scalar", label="u", values=(2.0,)),
            tol=1e-8,
            notes="Gauss-Legendre quadrature of gamma1 over [1,2] matches the closed-form integral.",
        ),
        IdentityCase(
            id="EQ3.2",
            lhs=_lhs_gamma0_laurent,
            rhs=_rhs_gamma0_series,
            domain=x_default,
            tol=1e-9,
            notes="Constant Laurent coefficient of zeta(s,x) at s = 1 equals -psi(x); the left side is an independent pole-subtracted limit.",
        ),
        IdentityCase(
            id="EQ4.4",
            lhs=_lhs_eq44,
            rhs=_rhs_eq44,
            domain=Domain("sx-grid", s_values=S_FOURIER),
            tol=1e-8,
            notes="Even Fourier closure: zeta(s,x) + zeta(s,1-x) = 4 Gamma(1-s) sin(pi s/2) * sum cos(2 n pi x)(2 pi n)^(s-1), at fixed s < 1.",
        ),
        IdentityCase(
            id="EQ4.5",
            lhs=_lhs_eq45,
            rhs=_rhs_eq45,
            domain=Domain("sx-grid", s_values=S_FOURIER),
            tol=1e-8,
            notes="Odd Fourier closure: zeta(s,x) - zeta(s,1-x) = 4 Gamma(1-s) cos(pi s/2) * sum sin(2 n pi x)(2 pi n)^(s-1), at fixed s < 1.",
        ),
        IdentityCase(
            id="EQ4.1",
            lhs=_lhs_eq41,
            rhs=_rhs_eq41,
            domain=x_default,
            tol=1e-6,
            notes="Regularized sine sum equals cot(pi x)/2.",
        ),
        IdentityCase(
            id="EQ4.14",
            lhs=_lhs_eq414,
            rhs=_rhs_eq414,
            domain=x_default,
            tol=1e-6,
            notes="Regularized cosine sum equals -1/2 for every x in (0,1).",
        ),
        IdentityCase(
            id="EQ4.14C",
            lhs=_lhs_eq414c,
            rhs=_rhs_eq414c,
            domain=x_default,
            tol=1e-6,
            notes="Complex pairing of the two unit-weight limits equals e^(2 pi i x)/(1 - e^(2 pi i x)); the residual is the complex modulus of the difference while the lhs/rhs columns list each side's modulus.",
            residual_fn=_res_eq414c,
        ),
        IdentityCase(
            id="EQ4.8",
            lhs=_lhs_gamma1_diff,
            rhs=_rhs_eq48,
            domain=x_default,
            tol=1e-6,
            notes="Headline identity: gamma1(1-x) - gamma1(x) = 2 pi * (regularized log-weighted sine sum) + pi (gamma + ln 2 pi) cot(pi x). Symmetric under x -> 1-x, both sides flipping sign.",
        ),
        IdentityCase(
            id="EQ4.10.1",
            lhs=_lhs_gamma1_diff,
            rhs=_rhs_eq4101,
            domain=x_default,
            tol=1e-6,
            notes="Combined-weight form: gamma1(1-x) - gamma1(x) = 2 pi * regularized sum of [gamma + ln(2 pi n)] sin(2 n pi x) n^(s-1), folding the cot term into the weight.",
        ),
        IdentityCase(
            id="EQ4.12",
            lhs=_lhs_eq412,
            rhs=_rhs_eq412,
            domain=u_default,
            tol=1e-6,
            notes="Cosine log sum: sum (ln n / n) cos(2 n pi u) = [zeta''(0,u) + zeta''(0,1-u)]/2 + (gamma + ln 2 pi) ln(2 sin pi u). The leading sign is plus; the value at u = 1/2 is gamma ln 2 - (ln 2)^2/2, pinning it.",
        ),
        IdentityCase(
            id="EQ4.12.1",
            lhs=_lhs_eq4121,
            rhs=_rhs_eq4121,
            domain=u_default,
            tol=1e-6,
            notes="Combined-weight cosine sum: sum [gamma + ln(2 pi n)]/n cos(2 n pi u) = [zeta''(0,u) + zeta''(0,1-u)]/2; the log-sine term of the plain form is absorbed by the weight.",
        ),
        IdentityCase(
            id="EQ4.13",
            lhs=_lhs_eq413,
            rhs=_rhs_zero,
            domain=Domain("scalar"),
            tol=1e-6,
            notes="Integral of zeta''(0,u) over (0,1) vanishes.",
        ),
        IdentityCase(
            id="EQ4.18",
            lhs=_lhs_eq418,
            rhs=_rhs_eq418,
            domain=x_default,
            tol=1e-6,
            notes="Doubled regularized log-cosine sum equals psi(x) + (pi/2) cot(pi x) + gamma + ln 2 pi.",
        ),
        IdentityCase(
            id="EQ4.19",
            lhs=_lhs_eq419,
            rhs=_rhs_eq419,
            domain=x_default,
            tol=1e-6,
            notes="psi(x) recovered from the regularized ln(2 pi n) cosine sum. Only the limit form holds: the same display without the s-limit (summing at the boundary exponent directly) is a known non-identity and is never asserted here.",
        ),
        IdentityCase(
            id="EQ4.20",
            lhs=_lhs_eq420,
            rhs=_rhs_eq420,
            domain=x_default,
            tol=1e-6,
            notes="Symmetrized form: psi(x) + psi(1-x) = -2 gamma + 4 * regularized ln(2 pi n) cosine sum.",
        ),
        IdentityCase(
            id="KUMMER",
            lhs=_lhs_kummer,
            rhs=_rhs_kummer,
            domain=x_default,
            tol=1e-6,
            notes="Antisymmetric log-gamma Fourier expansion: (2/pi) sum ln(2 pi n) sin(2 n pi x)/n = ln Gamma(x) - ln Gamma(1-x) + 2 gamma (x - 1/2).",
        ),
        IdentityCase(
            id="LOGSINE",
            lhs=_lhs_logsine,
            rhs=_rhs_logsine,
            domain=u_default,
            tol=1e-6,
            notes="sum ln(n) sin(2 n pi u)/(pi n) = ln Gamma(u) - ln(pi)/2 + ln(sin pi u)/2 + (u - 1/2)(gamma + ln 2 pi).",
        ),
        IdentityCase(
            id="EQ4.21",
            lhs=_lhs_eq421,
            rhs=_rhs_eq421,
            domain=x_default,
            tol=1e-6,
            notes="Alternating sine sum: regularized sum of (-1)^(n+1) sin(n pi x) n^(s-1) equals tan(pi x/2)/2.",
        ),
        IdentityCase(
            id="EQ4.22",
            lhs=_lhs_eq422,
            rhs=_rhs_eq422,
            domain=x_default,
            tol=1e-6,
            notes="Alternating cosine sum: regularized sum of (-1)^(n+1) cos(n pi x) n^(s-1) equals 1/2 for every x.",
        ),
        IdentityCase(
            id="EQ4.23",
            lhs=_lhs_eq423,
            rhs=_rhs_eq423,
            domain=x_default,
            tol=1e-6,
            notes="Odd-index sine sum: regularized sum over odd n of sin(n pi x) n^(s-1) equals 1/(2 sin pi x). The 1/2 prefactor is forced by the half-sum decomposition odd = (all + alternating)/2 and by the x = 1/2 value, where the series is the alternating (2k+1)^(-s) family with limit 1/2.",
        ),
        IdentityCase(
            id="ALTLOG",
            lhs=_lhs_altlog,
            rhs=_rhs_altlog,
            domain=Domain("scalar"),
            tol=1e-7,
            notes="Regularized sum of (-1)^n ln(n) (2 pi n)^(s-1) equals ln(pi/2)/2.",
        ),
        IdentityCase(
            id="PSIREFL",
            lhs=_lhs_psirefl,
            rhs=_rhs_psirefl,
            domain=x_default,
            tol=1e-7,
            notes="Difference of the series-based psi formula at 1-x and at x recovers the reflection value pi cot(pi x).",
        ),
        IdentityCase(
            id="HALFARG",
            lhs=_lhs_halfarg,
            rhs=_rhs_halfarg,
            domain=Domain("sm-grid", s_values=S_ORACLE),
            tol=1e-9,
            notes="Half argument: zeta(s,1/2) = (2^s - 1) zeta(s), checked together with its first and second s-derivatives.",
        ),
    )
    return cases


def _run_case(case: IdentityCase, grid_density: int, tol_scale: float) -> CaseResult:
    tol = case.tol / tol_scale
    records = []
    for coords in case.domain.points(grid_density):
        pt = dict(coords)
        lhs = rhs = residual = None
        note = ""
        try:
            lhs = case.lhs(pt)
            rhs = case.rhs(pt)
            residual = (
                case.residual_fn(pt) if case.residual_fn is not None else abs(lhs - rhs)
            )
        except (ArithmeticError, ValueError) as exc:
            note = f"{type(exc).__name__}: {exc}"
        passed = False
        if not note:
            if math.isfinite(residual):
                passed = residual <= tol
            else:
                residual = None
                note = "non-finite residual"
        records.append(PointRecord(tuple(coords), lhs, rhs, residual, passed, note))
    finite = [r.residual for r in records if r.residual is not None]
    return CaseResult(
        case_id=case.id,
        points=tuple(records),
        max_residual=max(finite) if finite else None,
        passed=bool(records) and all(r.passed for r in records),
        tol=tol,
    )


def _assemble(results, wall_time: float) -> VerificationReport:
    ordered = tuple(sorted(results, key=lambda c: c.case_id))
    finite = [c.max_residual for c in ordered if c.max_residual is not None]
    return VerificationReport(
        cases=ordered,
        cases_run=len(ordered),
        cases_passed=sum(1 for c in ordered if c.passed),
        max_residual=max(finite) if finite else None,
        wall_time=wall_time,
    )


def _check_run_args(grid_density: int, tol_scale: float) -> None:
    if grid_density < 3:
        raise DomainError(f"grid_density must be >= 3, got {grid_density}")
    if not tol_scale > 0.0:
        raise DomainError(f"tol_scale must be positive, got {tol_scale}")


def verify(case: IdentityCase, grid_density: int = 9, tol_scale: float = 1.0) -> VerificationReport:
    _check_run_args(grid_density, tol_scale)
    start = time.perf_counter()
    result = _run_case(case, grid_density, tol_scale)
    return _assemble([result], time.perf_counter() - start)


def verify_all(grid_density: int = 9, tol_scale: float = 1.0) -> VerificationReport:
    _check_run_args(grid_density, tol_scale)
    start = time.perf_counter()
    results = [_run_case(case, grid_density, tol_scale) for case in registry()]
    return _assemble(results, time.perf_counter() - start)
