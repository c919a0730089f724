"""The composed families Z, P, Y, O, X, their functional equations, exact
special values and the a-derivative identities.

Evaluation routes (0 < a <= 1/2 throughout):

  Z(s,a) = zeta(s,a) + zeta(s,1-a)               simple pole at s = 1
  Y(s,a) = zeta(s,a) - zeta(s,1-a)               entire; one paired
           Euler-Maclaurin pass so nothing large is ever subtracted
  P(s,a) = Li_s(e^{2pi i a}) + Li_s(e^{2pi i(1-a)})   entire
  O(s,a) = -i (Li_s(e^{2pi i a}) - Li_s(e^{2pi i(1-a)}))  entire
  X(s,a) = Y(s,a) + O(s,a)

For Re s below the series threshold, P and O are routed through their
functional-equation partners (Z and Y at 1-s), with the Z pole part of the
P route recombined analytically so the formula stays exact through s = 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from .core import (
    DEFAULT_SETTINGS,
    Alpha,
    AlphaLike,
    DomainError,
    EvalSettings,
    Family,
    PoleError,
    require_finite,
)
from .special import (
    gamma,
    hurwitz_pair_diff,
    hurwitz_pair_sum_minus_pole,
    hurwitz_zeta,
    periodic_zeta,
    riemann_zeta,
)

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SpecialValues:
    """Exact closed-form values at s = 0 and s = 1 for a given a."""

    z_at_0: complex
    p_at_0: complex
    p_at_1: complex
    li_at_0: complex


def _check_composed_alpha(a: Alpha) -> Alpha:
    if not 0.0 < a.value <= 0.5:
        raise DomainError(f"composed families require a in (0, 1/2], got {a.value!r}")
    return a


def _sin_half_over_s(s: complex) -> complex:
    """sin(pi s / 2) / s, continued through s = 0."""
    if abs(s) < 1e-5:
        x = 0.5 * math.pi * s
        return 0.5 * math.pi * (1.0 - x * x / 6.0 * (1.0 - x * x / 20.0))
    return cmath.sin(0.5 * math.pi * s) / s


def z_family(s: complex, a: Alpha, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    if s == 1.0:
        raise PoleError(
            "Z(s, a) has a simple pole at s = 1 (limit +inf from the right, -inf from the left)",
            1.0 + 0.0j,
            limits=(-math.inf, math.inf),
        )
    if a.value == 0.5:
        return 2.0 * hurwitz_zeta(s, 0.5, cfg)
    return hurwitz_zeta(s, a.value, cfg) + hurwitz_zeta(s, 1.0 - a.value, cfg)


def y_family(s: complex, a: Alpha, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    if a.value == 0.5:
        return 0.0 + 0.0j
    return hurwitz_pair_diff(s, a.value, cfg)


def p_family(s: complex, a: Alpha, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    if s.real > cfg.series_sigma_threshold:
        av = a.value
        if a.exact is not None:
            return periodic_zeta(s, a, cfg) + periodic_zeta(s, a.conjugate, cfg)
        return periodic_zeta(s, av, cfg) + periodic_zeta(s, 1.0 - av, cfg)
    # P(s,a) = 2 Gamma(1-s) (2pi)^{s-1} sin(pi s/2) Z(1-s, a); split Z into its
    # entire part plus the two pole parts so the sin/(−s) pair stays finite.
    av = a.value
    w = 1.0 - s
    entire = hurwitz_pair_sum_minus_pole(w, av, cfg)
    pref = 2.0 * gamma(w) * cmath.exp((s - 1.0) * math.log(_TWO_PI))
    sin_term = cmath.sin(0.5 * math.pi * s)
    # pole parts of Z(1-s): [a^s + (1-a)^s] / (-s); combined with sin(pi s/2)
    pole_sum = cmath.exp(s * math.log(av)) + cmath.exp(s * math.log(1.0 - av))
    return pref * (sin_term * entire - _sin_half_over_s(s) * pole_sum)


def o_family(s: complex, a: Alpha, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    if a.value == 0.5:
        return 0.0 + 0.0j
    if s.real > cfg.series_sigma_threshold:
        if a.exact is not None:
            diff = periodic_zeta(s, a, cfg) - periodic_zeta(s, a.conjugate, cfg)
        else:
            diff = periodic_zeta(s, a.value, cfg) - periodic_zeta(s, 1.0 - a.value, cfg)
        return -1j * diff
    # O(s,a) = 2 Gamma(1-s) (2pi)^{s-1} cos(pi s/2) Y(1-s, a); Y is entire.
    w = 1.0 - s
    pref = 2.0 * gamma(w) * cmath.exp((s - 1.0) * math.log(_TWO_PI))
    return pref * cmath.cos(0.5 * math.pi * s) * hurwitz_pair_diff(w, a.value, cfg)


def x_family(s: complex, a: Alpha, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    return y_family(s, a, cfg) + o_family(s, a, cfg)


_EVALUATORS: Dict[Family, Callable[[complex, Alpha, EvalSettings], complex]] = {
    Family.Z: z_family,
    Family.P: p_family,
    Family.Y: y_family,
    Family.O: o_family,
    Family.X: x_family,
}


def eval_family(fam: Family, s: complex, a: AlphaLike, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Evaluate one of the supported families at s.

    Composed families restrict a to (0, 1/2]; the Hurwitz zeta takes (0, 1]
    and the periodic zeta (0, 1).  L-functions need a character: see
    ``zetazeros.dirichlet.l_function``.
    """
    s = require_finite(s)
    alpha = Alpha.coerce(a)
    if fam.is_composed:
        return _EVALUATORS[fam](s, _check_composed_alpha(alpha), cfg)
    if fam is Family.HURWITZ:
        return hurwitz_zeta(s, alpha, cfg)
    if fam is Family.PERIODIC:
        return periodic_zeta(s, alpha, cfg)
    if fam is Family.RIEMANN:
        return riemann_zeta(s, cfg)
    raise DomainError(f"eval_family cannot evaluate {fam}; L-functions require a character")


# (family, partner, trig) for family(1-s) = 2 Gamma(s) (2pi)^{-s} trig(pi s/2) partner(s)
FUNCTIONAL_EQUATION_TABLE: Dict[Family, Tuple[Family, str]] = {
    Family.Z: (Family.P, "cos"),
    Family.P: (Family.Z, "cos"),
    Family.Y: (Family.O, "sin"),
    Family.O: (Family.Y, "sin"),
    Family.X: (Family.X, "sin"),
}


def functional_equation_pair(
    fam: Family, s: complex, a: AlphaLike, cfg: EvalSettings = DEFAULT_SETTINGS
) -> Tuple[complex, complex]:
    """Both sides of family(1-s,a) = 2 Gamma(s) (2pi)^{-s} trig(pi s/2) partner(s,a).

    The two sides are evaluated through independent kernel routes; callers
    assert their closeness.  Requires Re s > 0 and s != 1.
    """
    s = require_finite(s)
    if not s.real > 0.0:
        raise DomainError("functional equation pair needs Re s > 0")
    if s == 1.0:
        raise DomainError("functional equation pair is not defined at s = 1")
    alpha = _check_composed_alpha(Alpha.coerce(a))
    partner, trig = FUNCTIONAL_EQUATION_TABLE[fam]
    lhs = eval_family(fam, 1.0 - s, alpha, cfg)
    trig_val = cmath.cos(0.5 * math.pi * s) if trig == "cos" else cmath.sin(0.5 * math.pi * s)
    rhs = 2.0 * gamma(s) * cmath.exp(-s * math.log(_TWO_PI)) * trig_val * eval_family(partner, s, alpha, cfg)
    return lhs, rhs


def special_values(a: AlphaLike) -> SpecialValues:
    """Exact closed forms: Z(0,a) = 0, P(0,a) = -1, P(1,a) = -2 log(2 sin pi a),
    and the periodic zeta at s = 0."""
    alpha = Alpha.coerce(a)
    av = alpha.value
    if not 0.0 < av < 1.0:
        raise DomainError("special values need 0 < a < 1")
    return SpecialValues(
        z_at_0=0.0 + 0.0j,
        p_at_0=-1.0 + 0.0j,
        p_at_1=complex(-2.0 * math.log(2.0 * math.sin(math.pi * av))),
        li_at_0=complex(-0.5, 0.5 / math.tan(math.pi * av)),
    )


def partial_a(fam: Family, s: complex, a: AlphaLike, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """d/da of the Hurwitz zeta, Z, or P:

      HURWITZ -> -s zeta(s+1, a)     (s != 0)
      Z       -> -s Y(s+1, a)        (s != 0)
      P       -> -2 pi O(s-1, a)
    """
    s = require_finite(s)
    alpha = Alpha.coerce(a)
    if fam is Family.HURWITZ:
        if s == 0.0:
            raise PoleError("d/da zeta pole: s + 1 = 1", 0.0 + 0.0j)
        return -s * hurwitz_zeta(s + 1.0, alpha, cfg)
    if fam is Family.Z:
        if s == 0.0:
            raise PoleError("d/da Z pole: s + 1 = 1", 0.0 + 0.0j)
        return -s * y_family(s + 1.0, _check_composed_alpha(alpha), cfg)
    if fam is Family.P:
        return -_TWO_PI * o_family(s - 1.0, _check_composed_alpha(alpha), cfg)
    raise DomainError(f"partial_a supports HURWITZ, Z, P; got {fam}")
