"""Hurwitz zeta numerics, Stieltjes constants, and regularized
trigonometric series, with a verification catalogue over the
identities that connect them."""
from .extrapolate import neville_zero
from .hurwitz import HurwitzQuery, hurwitz_hasse, hurwitz_zeta, pole_residue_check
from .identities import (
    Domain,
    IdentityCase,
    VerificationReport,
    default_x_grid,
    quadrature_zeta2_integral,
    registry,
    uniform_x,
    verify,
    verify_all,
)
from .regsum import (
    ExtrapolationPath,
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
from .result import ConvergenceError, DomainError, EvalResult, PoleError
from .special import EULER_GAMMA, bernoulli, bernoulli_table, digamma, log_gamma
from .stieltjes import (
    StieltjesQuery,
    gamma1_finite_difference,
    gamma1_reflection_diff,
    integral_gamma,
    stieltjes_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "Domain",
    "DomainError",
    "EULER_GAMMA",
    "EvalResult",
    "ExtrapolationPath",
    "HurwitzQuery",
    "IdentityCase",
    "PoleError",
    "StieltjesQuery",
    "TrigSeriesSpec",
    "VerificationReport",
    "alternating_log_limit",
    "bernoulli",
    "bernoulli_table",
    "closed_form",
    "default_x_grid",
    "deninger_cos_log_sum",
    "digamma",
    "gamma1_finite_difference",
    "gamma1_reflection_diff",
    "hurwitz_hasse",
    "hurwitz_zeta",
    "integral_gamma",
    "kummer_sine_series",
    "log_gamma",
    "log_sine_fourier",
    "log_sine_fourier_target",
    "neville_zero",
    "pole_residue_check",
    "quadrature_zeta2_integral",
    "registry",
    "regularized_limit",
    "stieltjes_gamma",
    "trig_dirichlet_sum",
    "uniform_x",
    "verify",
    "verify_all",
    "__version__",
]
