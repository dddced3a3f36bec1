"""Foundation special functions: Bernoulli numbers, digamma, log-gamma.

Both psi and ln(Gamma) are computed by recurrence shifts up to a large
argument followed by the divergent asymptotic series truncated at its
optimal useful order.  With the shift threshold 8 and Bernoulli terms
through B_14 the absolute error stays below 1e-13 on (0, inf), well
inside the 1e-12 target.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .result import DomainError

# Euler-Mascheroni constant, binary64-correct.
EULER_GAMMA = 0.5772156649015329

_SHIFT_THRESHOLD = 8.0


def _bernoulli_fractions(count: int) -> Tuple[Fraction, ...]:
    # Defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1,
    # solved exactly in rationals.
    vals = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * vals[j]
        vals.append(-acc / (m + 1))
    return tuple(vals)


@dataclass(frozen=True)
class BernoulliTable:
    """Exact-rational Bernoulli numbers B_0 .. B_{2K}."""

    order: int = 16
    values: Tuple[Fraction, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")
        object.__setattr__(
            self, "values", _bernoulli_fractions(2 * self.order + 1)
        )

    def as_float(self, k: int) -> float:
        if k < 0 or k >= len(self.values):
            raise DomainError(f"Bernoulli index {k} outside table")
        return float(self.values[k])


_TABLE = BernoulliTable()

# Float copies of B_2, B_4, ..., B_14 used by the asymptotic series.
_B2J = tuple(_TABLE.as_float(2 * j) for j in range(1, 8))

# Harmonic numbers H_1 .. H_16 (used by Stieltjes tail closures).
HARMONIC = tuple(
    float(sum(Fraction(1, i) for i in range(1, m + 1))) for m in range(1, 17)
)


def bernoulli(k: int) -> float:
    """Bernoulli number B_k from the precomputed table (0 <= k <= 32)."""
    return _TABLE.as_float(k)


def bernoulli_table() -> BernoulliTable:
    return _TABLE


def digamma(x: float) -> float:
    """Digamma psi(x) for real x > 0, absolute error below 1e-12."""
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    shift = 0.0
    t = x
    while t < _SHIFT_THRESHOLD:
        shift += 1.0 / t
        t += 1.0
    inv2 = 1.0 / (t * t)
    # psi(t) ~ ln t - 1/(2t) - sum B_{2j} / (2j t^{2j})
    tail = 0.0
    p = inv2
    for j, b in enumerate(_B2J, start=1):
        tail += b / (2 * j) * p
        p *= inv2
    return math.log(t) - 0.5 / t - tail - shift


def log_gamma(x: float) -> float:
    """ln Gamma(x) for real x > 0, absolute error below 1e-12."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    shift = 0.0
    t = x
    while t < _SHIFT_THRESHOLD:
        shift += math.log(t)
        t += 1.0
    inv = 1.0 / t
    inv2 = inv * inv
    tail = 0.0
    p = inv
    for j, b in enumerate(_B2J, start=1):
        tail += b / ((2 * j) * (2 * j - 1)) * p
        p *= inv2
    stirl = (t - 0.5) * math.log(t) - t + 0.5 * math.log(2.0 * math.pi)
    return stirl + tail - shift
