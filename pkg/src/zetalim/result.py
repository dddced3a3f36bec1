"""Shared result container and error types."""
from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Argument outside the supported domain (e.g. x <= 0)."""


class PoleError(ValueError):
    """Evaluation requested too close to the s = 1 pole."""


class ConvergenceError(ArithmeticError):
    """A series or transform failed to reach its accuracy target."""


@dataclass(frozen=True)
class EvalResult:
    """Numeric result with an a-posteriori error estimate.

    value: the computed quantity.
    err_estimate: absolute error estimate derived from the last
        correction or transform increment of the algorithm that
        produced the value.  It is a truncation estimate, not a
        rigorous bound on binary64 rounding.
    terms_used: number of series terms / nodes consumed (>= 1).
    method_tag: short label of the algorithm.
    """

    value: float
    err_estimate: float
    terms_used: int
    method_tag: str

    def __post_init__(self) -> None:
        if self.err_estimate < 0.0:
            raise ValueError("err_estimate must be >= 0")
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
