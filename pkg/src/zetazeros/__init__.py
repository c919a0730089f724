"""Evaluation and zero location for the Hurwitz zeta, the periodic zeta, and
the composed families Z, P, Y, O, X, plus the Dirichlet-character identities
that tie them together."""

from .core import (
    AccuracyWarning,
    Alpha,
    BoundaryError,
    ConvergenceError,
    DomainError,
    EvalSettings,
    Family,
    PoleError,
    UnsupportedError,
    ZetaError,
    DEFAULT_SETTINGS,
    parse_family,
)
from .special import (
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_exact,
    gamma,
    hurwitz_pair_diff,
    hurwitz_zeta,
    log_gamma,
    periodic_zeta,
    riemann_zeta,
)
from .families import (
    SpecialValues,
    eval_family,
    functional_equation_pair,
    partial_a,
    special_values,
)
from .dirichlet import (
    DirichletCharacter,
    characters_mod,
    chi_minus3,
    chi_minus4,
    chi_minus6,
    closed_form_identity,
    euler_phi,
    f_factor,
    g_factor,
    gauss_sum,
    l_function,
    linear_relation_residual,
)
from .zeros import (
    BetaCurvePoint,
    RectangleCount,
    ZeroRecord,
    asymptotic_prediction,
    beta_zero,
    count_zeros_rectangle,
    interval_zero_criterion,
    monotone_kernel,
    scan_real_zeros,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "Alpha",
    "BetaCurvePoint",
    "BoundaryError",
    "ConvergenceError",
    "DEFAULT_SETTINGS",
    "DirichletCharacter",
    "DomainError",
    "EvalSettings",
    "Family",
    "PoleError",
    "RectangleCount",
    "SpecialValues",
    "UnsupportedError",
    "ZeroRecord",
    "ZetaError",
    "asymptotic_prediction",
    "beta_zero",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_exact",
    "characters_mod",
    "chi_minus3",
    "chi_minus4",
    "chi_minus6",
    "closed_form_identity",
    "count_zeros_rectangle",
    "euler_phi",
    "eval_family",
    "f_factor",
    "functional_equation_pair",
    "g_factor",
    "gamma",
    "gauss_sum",
    "hurwitz_pair_diff",
    "hurwitz_zeta",
    "l_function",
    "linear_relation_residual",
    "log_gamma",
    "interval_zero_criterion",
    "monotone_kernel",
    "parse_family",
    "partial_a",
    "periodic_zeta",
    "riemann_zeta",
    "scan_real_zeros",
    "special_values",
]
