"""Weighted trigonometric Dirichlet series and their regularized limits.

A series here is sum_{n>=1} w(n) trig(angle_n) n^{s-1} with weight
w(n) in {1, ln n, ln 2pi n, gamma + ln 2pi n}, optionally rescaled to
the (2 pi n)^{s-1} normalization.  Parities:

    all_n        trig(2 n pi x), every n
    alternating  (-1)^{n+1} trig(n pi x)
    odd_only     trig(n pi x), odd n only (unit weight)

Everything reduces to the master sum M(y, s, w) = sum w(n) z^n n^{s-1}
with z = e^{2 pi i y}: the alternating series is -M((x+1)/2, s, w) and
the odd-index series is M(x/2, s, w) - 2^{s-1} M(x, s, w).

M is summed head-first with the tail accelerated by an iterated Euler
transform on the forward differences of the coefficient sequence; on
the unit circle away from z = 1 that converges geometrically.  Limits
s -> s* in {0, 1} are taken by Neville extrapolation over the sample
path s* - h_k, h_k = h0 2^{-k}, where every sampled s stays strictly
inside the s < 1 convergence half-line.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .extrapolate import neville_zero
from .result import ConvergenceError, DomainError, EvalResult
from .special import EULER_GAMMA, digamma, log_gamma
from .stieltjes import gamma1_reflection_diff

TRIG_KINDS = ("sine", "cosine")
WEIGHT_KINDS = ("unit", "log_n", "log_2pi_n", "gamma_plus_log_2pi_n")
PARITY_KINDS = ("all_n", "alternating", "odd_only")
SCALE_KINDS = ("n_power", "two_pi_n_power")

_TWO_PI = 2.0 * math.pi
_EDGE_BAND = 0.01
_HEAD_START = 64
_HEAD_CAP = 32768
_SWEEPS = 40
_ENGINE_TARGET = 5e-12

CLOSED_FORM_CASES = ("4.1", "4.3re", "4.3im", "4.8", "4.14", "4.18", "4.21", "4.22", "4.23")


@dataclass(frozen=True)
class TrigSeriesSpec:
    """One weighted trigonometric Dirichlet series at fixed real s."""

    x: float
    trig: str
    weight: str
    parity: str = "all_n"
    s: float = 0.0
    scale: str = "n_power"

    def __post_init__(self) -> None:
        if not 0.0 < self.x < 1.0:
            raise DomainError(f"x must lie in (0, 1), got {self.x}")
        if self.trig not in TRIG_KINDS:
            raise DomainError(f"trig must be one of {TRIG_KINDS}")
        if self.weight not in WEIGHT_KINDS:
            raise DomainError(f"weight must be one of {WEIGHT_KINDS}")
        if self.parity not in PARITY_KINDS:
            raise DomainError(f"parity must be one of {PARITY_KINDS}")
        if self.scale not in SCALE_KINDS:
            raise DomainError(f"scale must be one of {SCALE_KINDS}")
        if self.parity == "odd_only" and self.weight != "unit":
            raise DomainError("odd_only parity is defined for unit weight only")


@dataclass(frozen=True)
class ExtrapolationPath:
    """Geometric offset ladder h_k = h0 2^{-k}, k = 0..depth."""

    target: float
    h0: float = 0.25
    depth: int = 8

    def __post_init__(self) -> None:
        if self.target not in (0.0, 1.0):
            raise DomainError(f"limit target must be 0 or 1, got {self.target}")
        if not 0.0 < self.h0 <= 0.25:
            raise DomainError(f"h0 must satisfy 0 < h0 <= 1/4, got {self.h0}")
        if self.depth < 6:
            raise DomainError(f"depth must be >= 6, got {self.depth}")

    @property
    def offsets(self) -> Tuple[float, ...]:
        return tuple(self.h0 * 2.0**-k for k in range(self.depth + 1))


def _weights(narr: np.ndarray, weight: str) -> np.ndarray:
    if weight == "unit":
        return np.ones_like(narr)
    if weight == "log_n":
        return np.log(narr)
    if weight == "log_2pi_n":
        return np.log(_TWO_PI * narr)
    return EULER_GAMMA + np.log(_TWO_PI * narr)


def _master_sum(y: float, s: float, weight: str, n_direct: int) -> Tuple[complex, float]:
    """M(y, s, w) = sum_{n>=1} w(n) e^{2 pi i n y} n^{s-1} for s < 1.

    Head of n_direct terms summed pairwise; the remainder is an
    iterated Euler transform with ratio z/(1-z).  Returns the value
    and the size of the last accepted transform increment plus a
    rounding floor.
    """
    y = y % 1.0
    # Split y so that n*y mod 1 is exact for n up to 2^21.
    y_hi = round(y * 2**26) / 2**26
    y_lo = y - y_hi

    def phases(narr: np.ndarray) -> np.ndarray:
        fr = (narr * y_hi) % 1.0 + narr * y_lo
        return np.exp(2j * np.pi * (fr % 1.0))

    z1 = complex(np.exp(2j * np.pi * ((y_hi % 1.0) + y_lo)))
    if abs(1.0 - z1) < 1e-9:
        raise ConvergenceError(f"phase point e^(2 pi i {y}) too close to 1")

    narr = np.arange(1, n_direct, dtype=np.float64)
    coeff = _weights(narr, weight) * narr ** (s - 1.0)
    head = complex(np.sum(coeff * phases(narr)))
    abs_head = float(np.sum(np.abs(coeff)))

    marr = np.arange(n_direct, n_direct + _SWEEPS + 2, dtype=np.float64)
    d = (_weights(marr, weight) * marr ** (s - 1.0)).tolist()
    z_n = complex(phases(np.array([float(n_direct)]))[0])
    mu = z1 / (1.0 - z1)
    pref = z_n / (1.0 - z1)
    tail = 0.0 + 0.0j
    mupow = 1.0 + 0.0j
    incs: list[float] = []
    for _ in range(_SWEEPS):
        term = pref * mupow * d[0]
        tail += term
        incs.append(abs(term))
        if len(incs) >= 3 and incs[-1] < 1e-17 * (abs(tail) + 1.0):
            break
        if len(incs) >= 6 and incs[-1] > incs[-2] > incs[-3]:
            # Transform started diverging; drop the growing term.
            tail -= term
            incs.pop()
            break
        d = [d[i + 1] - d[i] for i in range(len(d) - 1)]
        mupow *= mu
    err = (incs[-1] if incs else 0.0) + 1e-16 * (abs_head + 1.0)
    return head + tail, err


def _master_sum_adaptive(
    y: float, s: float, weight: str
) -> Tuple[complex, float, int]:
    n = _HEAD_START
    best: Tuple[complex, float, int] | None = None
    while True:
        value, err = _master_sum(y, s, weight, n)
        if best is None or err < best[1]:
            best = (value, err, n)
        if err <= _ENGINE_TARGET or n >= _HEAD_CAP:
            return best
        n *= 2


def trig_dirichlet_sum(spec: TrigSeriesSpec) -> EvalResult:
    """Evaluate the series of `spec` inside its convergence region s < 1."""
    if not spec.s < 1.0:
        raise ConvergenceError(
            f"series converges only for s < 1, got s = {spec.s}"
        )
    if spec.parity == "all_n":
        parts = [(1.0, spec.x)]
    elif spec.parity == "alternating":
        parts = [(-1.0, (spec.x + 1.0) / 2.0)]
    else:
        parts = [(1.0, spec.x / 2.0), (-(2.0 ** (spec.s - 1.0)), spec.x)]

    total = 0.0 + 0.0j
    err = 0.0
    terms = 0
    for coef, y in parts:
        val, part_err, n_used = _master_sum_adaptive(y, spec.s, spec.weight)
        total += coef * val
        err += abs(coef) * part_err
        terms += n_used
    value = total.imag if spec.trig == "sine" else total.real
    if spec.scale == "two_pi_n_power":
        fac = _TWO_PI ** (spec.s - 1.0)
        value *= fac
        err *= fac
    if min(spec.x, 1.0 - spec.x) < _EDGE_BAND:
        err = max(err, 1e-8)
    return EvalResult(
        value=value, err_estimate=err, terms_used=terms, method_tag="osc-euler"
    )


def regularized_limit(
    x: float,
    trig: str,
    weight: str,
    parity: str = "all_n",
    scale: str = "n_power",
    s_target: float = 1.0,
    path: ExtrapolationPath | None = None,
) -> EvalResult:
    """Limit s -> s_target of the series, by extrapolation along `path`."""
    if not _EDGE_BAND < x < 1.0 - _EDGE_BAND:
        raise DomainError(
            f"regularized limits need {_EDGE_BAND} < x < {1.0 - _EDGE_BAND}, got {x}"
        )
    if path is None:
        path = ExtrapolationPath(target=float(s_target))
    elif path.target != float(s_target):
        raise DomainError("path.target disagrees with s_target")
    hs = list(path.offsets)
    vals = []
    point_err = 0.0
    terms = 0
    for h in hs:
        r = trig_dirichlet_sum(
            TrigSeriesSpec(x=x, trig=trig, weight=weight, parity=parity,
                           s=path.target - h, scale=scale)
        )
        vals.append(r.value)
        point_err = max(point_err, r.err_estimate)
        terms += r.terms_used
    value, corrections = neville_zero(hs, vals)
    if corrections[-1] > 1e-10 and corrections[-1] > 8.0 * min(corrections):
        raise ConvergenceError(
            f"extrapolation unstable: corrections {corrections[-3:]}"
        )
    err = max(corrections[-1], point_err)
    return EvalResult(
        value=value, err_estimate=err, terms_used=terms, method_tag="neville-osc"
    )


def _cot(t: float) -> float:
    return math.cos(t) / math.sin(t)


def closed_form(x: float, case_id: str) -> float:
    """Closed-form target of a regularized limit at this x.

    Supported case ids: 4.1 (sine, unit), 4.3re / 4.3im (complex
    combination), 4.8 (sine, log weight), 4.14 (cosine, unit), 4.18
    (cosine, log weight, doubled), 4.21 / 4.22 (alternating), 4.23
    (odd index sine).  The 4.23 target is 1/(2 sin pi x): the value at
    x = 1/2 is the alternating (2n+1)^{-s} series at s = 0, which
    equals 1/2, pinning the prefactor.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"closed_form requires 0 < x < 1, got {x}")
    pix = math.pi * x
    if case_id == "4.1":
        return 0.5 * _cot(pix)
    if case_id == "4.3re":
        return -0.5
    if case_id == "4.3im":
        return 0.5 * _cot(pix)
    if case_id == "4.8":
        c = math.pi * (EULER_GAMMA + math.log(_TWO_PI))
        diff = gamma1_reflection_diff(x).value
        return (diff - c * _cot(pix)) / _TWO_PI
    if case_id == "4.14":
        return -0.5
    if case_id == "4.18":
        return digamma(x) + 0.5 * math.pi * _cot(pix) + EULER_GAMMA + math.log(_TWO_PI)
    if case_id == "4.21":
        return 0.5 * math.tan(0.5 * pix)
    if case_id == "4.22":
        return 0.5
    if case_id == "4.23":
        return 0.5 / math.sin(pix)
    raise ValueError(f"unknown closed-form case id: {case_id!r}")


def deninger_cos_log_sum(u: float) -> EvalResult:
    """sum_{n>=1} (ln n / n) cos(2 n pi u), summed directly at s = 0."""
    if not _EDGE_BAND < u < 1.0 - _EDGE_BAND:
        raise DomainError(f"u must lie in (0.01, 0.99), got {u}")
    return trig_dirichlet_sum(
        TrigSeriesSpec(x=u, trig="cosine", weight="log_n", s=0.0)
    )


def kummer_sine_series(x: float) -> EvalResult:
    """(2/pi) sum_{n>=1} ln(2 pi n) sin(2 n pi x) / n.

    Equals ln Gamma(x) - ln Gamma(1-x) + 2 gamma (x - 1/2) on (0, 1).
    """
    if not _EDGE_BAND < x < 1.0 - _EDGE_BAND:
        raise DomainError(f"x must lie in (0.01, 0.99), got {x}")
    r = trig_dirichlet_sum(
        TrigSeriesSpec(x=x, trig="sine", weight="log_2pi_n", s=0.0)
    )
    fac = 2.0 / math.pi
    return EvalResult(
        value=fac * r.value,
        err_estimate=fac * r.err_estimate,
        terms_used=r.terms_used,
        method_tag=r.method_tag,
    )


def log_sine_fourier(u: float) -> EvalResult:
    """sum_{n>=1} ln(n) sin(2 n pi u) / (pi n).

    Equals ln Gamma(u) - ln(pi)/2 + ln(sin pi u)/2
    + (u - 1/2)(gamma + ln 2 pi) on (0, 1).
    """
    if not _EDGE_BAND < u < 1.0 - _EDGE_BAND:
        raise DomainError(f"u must lie in (0.01, 0.99), got {u}")
    r = trig_dirichlet_sum(
        TrigSeriesSpec(x=u, trig="sine", weight="log_n", s=0.0)
    )
    fac = 1.0 / math.pi
    return EvalResult(
        value=fac * r.value,
        err_estimate=fac * r.err_estimate,
        terms_used=r.terms_used,
        method_tag=r.method_tag,
    )


def log_sine_fourier_target(u: float) -> float:
    """Closed form matched by log_sine_fourier."""
    if not 0.0 < u < 1.0:
        raise DomainError(f"target requires 0 < u < 1, got {u}")
    return (
        log_gamma(u)
        - 0.5 * math.log(math.pi)
        + 0.5 * math.log(math.sin(math.pi * u))
        + (u - 0.5) * (EULER_GAMMA + math.log(_TWO_PI))
    )


def alternating_log_limit() -> EvalResult:
    """lim_{s -> 1} sum (-1)^n ln(n) (2 pi n)^{s-1} = ln(pi/2) / 2.

    The sign (-1)^n is cos(2 pi n / 2), so this is the cosine series
    with log weight at x = 1/2.
    """
    return regularized_limit(
        0.5, "cosine", "log_n", "all_n", "two_pi_n_power", 1.0
    )
