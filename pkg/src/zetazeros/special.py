"""Double-precision special functions: Bernoulli polynomials, complex gamma,
Riemann/Hurwitz zeta via Euler-Maclaurin, and the periodic zeta.

All evaluation is pure and reentrant; the Bernoulli coefficient tables are
built once at import time and never mutated.  Powers of positive real bases
always use the principal real logarithm, so no branch cut is ever crossed.
"""

from __future__ import annotations

import cmath
import math
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core import (
    DEFAULT_SETTINGS,
    AccuracyWarning,
    Alpha,
    AlphaLike,
    DomainError,
    EvalSettings,
    PoleError,
    UnsupportedError,
    require_finite,
)

_TWO_PI = 2.0 * math.pi

BERNOULLI_MAX_INDEX = 60


def _build_bernoulli_numbers(n_max: int) -> Tuple[Fraction, ...]:
    # Akiyama-Tanigawa gives B_m with the B_1 = +1/2 convention; we flip to
    # B_1 = -1/2 so that B_n(x) = sum C(n,k) B_k x^{n-k} yields B_1(x) = x - 1/2.
    acc = [Fraction(0)] * (n_max + 1)
    out: List[Fraction] = []
    for m in range(n_max + 1):
        acc[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            acc[j - 1] = j * (acc[j - 1] - acc[j])
        out.append(acc[0])
    out[1] = -out[1]
    return tuple(out)


BERNOULLI_NUMBERS: Tuple[Fraction, ...] = _build_bernoulli_numbers(BERNOULLI_MAX_INDEX)

# B_{2k} / (2k)! as floats, k = 0 .. 30, used by the Euler-Maclaurin corrections.
_B2K_OVER_FACT: Tuple[float, ...] = tuple(
    float(BERNOULLI_NUMBERS[2 * k] / math.factorial(2 * k)) for k in range(BERNOULLI_MAX_INDEX // 2 + 1)
)


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention), n <= 60."""
    if n < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if n > BERNOULLI_MAX_INDEX:
        raise UnsupportedError(f"Bernoulli numbers tabulated only up to index {BERNOULLI_MAX_INDEX}")
    return BERNOULLI_NUMBERS[n]


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(n: int) -> Tuple[Fraction, ...]:
    """Exact coefficients of B_n(x), highest degree first (for Horner)."""
    if n < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if n > BERNOULLI_MAX_INDEX:
        raise UnsupportedError(f"Bernoulli polynomials supported only up to order {BERNOULLI_MAX_INDEX}")
    return tuple(math.comb(n, k) * BERNOULLI_NUMBERS[k] for k in range(n + 1))


def bernoulli_poly(n: int, x: float) -> float:
    """B_n(x) by Horner's scheme on the exact rational coefficients."""
    result = 0.0
    for c in bernoulli_poly_coeffs(n):
        result = result * x + float(c)
    return result


def bernoulli_poly_exact(n: int, x: Fraction) -> Fraction:
    """B_n(x) in exact rational arithmetic (sign-safe for criteria tests)."""
    result = Fraction(0)
    for c in bernoulli_poly_coeffs(n):
        result = result * x + c
    return result


# ---------------------------------------------------------------------------
# Complex gamma: Lanczos approximation (g = 7, 9 terms) with reflection.

_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _lanczos_series(z: complex) -> complex:
    acc = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        acc += c / (z + i)
    return acc


def _gamma_right(z: complex) -> complex:
    # Valid for Re z >= 0.5.
    z -= 1.0
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * _lanczos_series(z)


def _nonpositive_integer(s: complex, tol: float = 0.0) -> Optional[int]:
    if s.imag != 0.0:
        return None
    r = round(s.real)
    if r <= 0 and abs(s.real - r) <= tol:
        return int(r)
    return None


def gamma(s: complex) -> complex:
    """Gamma(s) for complex s; reflection formula is used for Re s < 1/2.

    Raises PoleError at the nonpositive integers.  Relative accuracy is
    ~1e-13 for |s| <= 100.
    """
    s = require_finite(s)
    pole = _nonpositive_integer(s)
    if pole is not None:
        raise PoleError(f"gamma pole at s = {pole}", complex(pole))
    if s.real >= 0.5:
        return _gamma_right(s)
    return math.pi / (cmath.sin(math.pi * s) * _gamma_right(1.0 - s))


def _log_sin_pi(z: complex) -> complex:
    # log sin(pi z) up to a multiple of 2*pi*i, stable for large |Im z|.
    if z.imag >= 0.0:
        # sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), with the exploding
        # exponential factored out explicitly.
        w = cmath.exp(2j * math.pi * z)  # |w| = e^{-2 pi Im z} <= 1
        return -1j * math.pi * z + cmath.log((w - 1.0) / 2j)
    return _log_sin_pi(z.conjugate()).conjugate()


def log_gamma(s: complex) -> complex:
    """A logarithm of Gamma(s): exp(log_gamma(s)) == gamma(s).

    The branch is NOT the principal one; this is only meant for forming
    exp() of balanced combinations without overflow.
    """
    s = require_finite(s)
    pole = _nonpositive_integer(s)
    if pole is not None:
        raise PoleError(f"gamma pole at s = {pole}", complex(pole))
    if s.real >= 0.5:
        z = s - 1.0
        t = z + _LANCZOS_G + 0.5
        return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * cmath.log(t) - t + cmath.log(_lanczos_series(z))
    return math.log(math.pi) - _log_sin_pi(s) - log_gamma(1.0 - s)


# ---------------------------------------------------------------------------
# Euler-Maclaurin engine for weighted combinations sum_j w_j * zeta(s, b_j).

_EM_MAX_HALF_ORDER = 29  # B_58 is the last correction, B_60 bounds the remainder


@lru_cache(maxsize=512)
def _log_bases(key: Tuple[float, ...], m: int) -> np.ndarray:
    bases = np.asarray(key, dtype=float)
    grid = np.arange(m, dtype=float)[:, None] + bases[None, :]
    out = np.log(grid)
    out.setflags(write=False)
    return out


def _em_parameters(s: complex, cfg: EvalSettings) -> Tuple[int, int]:
    t = abs(s.imag)
    if s.real >= 0.0:
        m = cfg.em_shift if t <= cfg.em_shift else math.ceil(t)
    else:
        # Negative real part: (n+b)^{-s} grows with n, so keep the direct block
        # tiny and lean on higher-order corrections instead.
        m = max(2, math.ceil(1.35 * (t + 8.0) / _TWO_PI))
    return m, cfg.em_order // 2


def _cexpm1(z: complex) -> complex:
    if abs(z.real) < 0.5 and abs(z.imag) < 0.5:
        return complex(np.expm1(np.complex128(z)))
    return cmath.exp(z) - 1.0


def _hurwitz_combination(
    s: complex,
    bases: Sequence[float],
    weights: Sequence[complex],
    cfg: EvalSettings,
    subtract_pole: bool = False,
) -> Tuple[complex, float]:
    """Euler-Maclaurin value of sum_j w_j * zeta(s, b_j), with remainder estimate.

    With subtract_pole=True each term is zeta(s, b_j) - b_j^{1-s}/(s-1), an
    entire function; the integral term is then assembled through expm1 so the
    combination stays stable arbitrarily close to s = 1.
    """
    base_key = tuple(float(b) for b in bases)
    w_arr = np.asarray(weights, dtype=complex)
    m, k_start = _em_parameters(s, cfg)
    tol = cfg.target_abs_tol

    best: Optional[Tuple[complex, float]] = None
    for attempt in range(3):
        value, series_rem, round_rem = _em_once(s, base_key, w_arr, m, k_start, subtract_pole, tol)
        rem = series_rem + round_rem
        if best is None or rem < best[1]:
            best = (value, rem)
        # Absolute target for O(1) values, relative once the value itself is large.
        if rem <= tol * max(1.0, abs(value)):
            return best
        if round_rem >= series_rem:
            break  # roundoff dominates; a larger shift only makes it worse
        m = 2 * m  # a larger shift sharpens the truncation bound
    return best


def _em_once(
    s: complex,
    base_key: Tuple[float, ...],
    w_arr: np.ndarray,
    m: int,
    k_start: int,
    subtract_pole: bool,
    tol: float,
) -> Tuple[complex, float, float]:
    eps = 2.220446049250313e-16
    logs = _log_bases(base_key, m)  # shape (m, nbases)
    direct_terms = np.exp(-s * logs)
    direct = complex(direct_terms.sum(axis=0) @ w_arr)
    round_rem = eps * float(np.abs(direct_terms).sum()) * float(np.abs(w_arr).max())

    tails_log = np.log(np.asarray(base_key) + m)  # log(m + b_j)
    p = np.exp(-s * tails_log)  # (m+b_j)^{-s}

    if subtract_pole:
        # [(m+b)^{1-s} - b^{1-s}] / (s-1) per base, via expm1 for stability at s=1.
        integral = 0.0 + 0.0j
        for j, b in enumerate(base_key):
            lb = math.log(b)
            span = tails_log[j] - lb
            if s == 1.0:
                quotient = -span
            else:
                quotient = _cexpm1((1.0 - s) * span) / (s - 1.0)
            integral += w_arr[j] * cmath.exp((1.0 - s) * lb) * quotient
    else:
        if s == 1.0:
            raise PoleError("zeta(s, a) has a simple pole at s = 1", 1.0 + 0.0j)
        integral = complex((p * np.exp(tails_log)) @ w_arr) / (s - 1.0)

    boundary = 0.5 * complex(p @ w_arr)

    # Bernoulli corrections: term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * (m+b)^{-s-2k+1}
    powers = p * np.exp(-tails_log)  # (m+b)^{-s-1}
    inv_sq = np.exp(-2.0 * tails_log)
    wsum = float(np.abs(w_arr).sum())
    poch = s
    corrections = 0.0 + 0.0j
    prev_mag = math.inf
    rem = math.inf
    for k in range(1, _EM_MAX_HALF_ORDER + 1):
        if poch == 0.0:
            rem = 0.0  # Pochhammer hit an exact zero: the expansion terminated
            break
        term_vec = _B2K_OVER_FACT[k] * poch * powers
        mag = float(np.abs(term_vec).max()) * wsum
        if k > 1 and mag > prev_mag:
            rem = mag  # asymptotic series started growing; stop before it
            break
        corrections += complex(term_vec @ w_arr)
        prev_mag = mag
        rem = mag
        round_rem = max(round_rem, eps * mag)
        if k >= k_start and mag <= 1e-3 * tol:
            break
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        powers = powers * inv_sq
    return direct + integral + boundary + corrections, rem, round_rem


def _tol_scale(tol: float, value: complex) -> float:
    # target_abs_tol is an absolute target for O(1) values; for large values it
    # is interpreted relative to the value (double precision cannot do better).
    return tol * max(1.0, abs(value))


def _warn_accuracy(rem: float, tol: float, s: complex) -> None:
    # Fixed message text so the default "once per message" warning filters can
    # deduplicate sweeps; details travel as attributes.
    w = AccuracyWarning("internal error bound could not certify the target tolerance")
    w.bound = rem
    w.target = tol
    w.at = s
    warnings.warn(w, stacklevel=3)


def hurwitz_zeta(s: complex, a: AlphaLike, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Hurwitz zeta zeta(s, a) with full analytic continuation (s != 1).

    ``a`` is normally in (0, 1] but any a > 0 is accepted (the shifted values
    are what the recurrence zeta(s,a) = a^{-s} + zeta(s,a+1) produces).

    Euler-Maclaurin is the workhorse.  Deep in the left half-plane with t != 0
    its direct block cancels catastrophically in doubles, so when the internal
    error model cannot certify target_abs_tol the reflection through the
    absolutely convergent conjugate series at 1-s is used instead; if neither
    route certifies the tolerance an AccuracyWarning is attached.
    """
    s = require_finite(s)
    if s == 1.0:
        raise PoleError("zeta(s, a) has a simple pole at s = 1", 1.0 + 0.0j)
    if isinstance(a, Alpha):
        av = a.value
    else:
        av = float(a)
        if not av > 0.0:
            raise DomainError(f"hurwitz_zeta requires a > 0, got {av!r}")
    value, rem = _hurwitz_combination(s, (av,), (1.0,), cfg)
    if rem <= _tol_scale(cfg.target_abs_tol, value):
        return value
    if s.real < 0.0:
        refl, refl_rem = _hurwitz_reflect(s, av, cfg)
        if refl_rem < rem:
            value, rem = refl, refl_rem
    if rem > _tol_scale(cfg.target_abs_tol, value):
        _warn_accuracy(rem, cfg.target_abs_tol, s)
    return value


def _hurwitz_reflect(s: complex, a: float, cfg: EvalSettings) -> Tuple[complex, float]:
    """zeta(s, a) for Re s < 0 via
    Gamma(w)/(2pi)^w [e^{-i pi w/2} Li_w(e^{2 pi i a}) + e^{i pi w/2} Li_w(e^{-2 pi i a})]
    with w = 1 - s (Re w > 1, so both series converge absolutely)."""
    # Reduce a to (0, 1]: zeta(s, a) = zeta(s, frac) - sum_{j} (frac+j)^{-s}.
    shift = 0.0 + 0.0j
    while a > 1.0:
        a -= 1.0
        shift += cmath.exp(-s * math.log(a))
    w = 1.0 - s
    half = 0.5j * math.pi * w
    eps = 2.220446049250313e-16
    if a == 1.0:
        zw, zw_rem = _hurwitz_combination(w, (1.0,), (1.0,), cfg)
        pref = gamma(w) * cmath.exp(-w * math.log(_TWO_PI))
        value = 2.0 * pref * cmath.cos(0.5 * math.pi * w) * zw
        rem = (zw_rem + eps * abs(zw)) * 2.0 * abs(pref) * abs(cmath.cos(0.5 * math.pi * w))
        return value - shift, rem
    la, la_err = _li_series(w, a, cfg)
    lb, lb_err = _li_series(w, 1.0 - a, cfg)
    if abs(s.imag) < 600.0:
        pref = gamma(w) * cmath.exp(-w * math.log(_TWO_PI))
        ta = cmath.exp(-half) * la
        tb = cmath.exp(half) * lb
        value = pref * (ta + tb)
        rem = abs(pref) * (
            abs(cmath.exp(-half)) * (la_err + eps * abs(la))
            + abs(cmath.exp(half)) * (lb_err + eps * abs(lb))
        )
        return value - shift, rem
    logpref = log_gamma(w) - w * math.log(_TWO_PI)
    value = 0.0 + 0.0j
    rem = 0.0
    for term, err, sign in ((la, la_err, -1.0), (lb, lb_err, 1.0)):
        if term != 0.0:
            piece = cmath.exp(logpref + sign * half + cmath.log(term))
            value += piece
            rem += abs(piece) * (err / max(abs(term), 1e-300) + eps)
    return value - shift, rem


def hurwitz_zeta_minus_pole(s: complex, a: float, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """The entire part zeta(s, a) - a^{1-s}/(s-1), valid at s = 1 as well."""
    s = require_finite(s)
    value, rem = _hurwitz_combination(s, (float(a),), (1.0,), cfg, subtract_pole=True)
    if rem > _tol_scale(cfg.target_abs_tol, value):
        _warn_accuracy(rem, cfg.target_abs_tol, s)
    return value


def hurwitz_pair_diff(s: complex, a: float, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """zeta(s, a) - zeta(s, 1-a) computed through one shared Euler-Maclaurin pass.

    The paired form keeps the two pole parts together (the difference is
    entire), so it is usable at every s including s = 1, and it avoids the
    cancellation of two separately rounded values for Re s > 0.  Deep in the
    left half-plane with t != 0 the sine-kernel reflection through the
    conjugate series at 1-s takes over when Euler-Maclaurin cannot certify
    the tolerance.
    """
    s = require_finite(s)
    if not 0.0 < a < 1.0:
        raise DomainError("pair difference needs 0 < a < 1")
    entire, rem = _hurwitz_combination(s, (a, 1.0 - a), (1.0, -1.0), cfg, subtract_pole=True)
    # pole difference [a^{1-s} - (1-a)^{1-s}] / (s-1), finite at s = 1
    u = math.log(a / (1.0 - a))
    if s == 1.0:
        pole_diff = complex(-u)
    else:
        pole_diff = cmath.exp((1.0 - s) * math.log(1.0 - a)) * _cexpm1((1.0 - s) * u) / (s - 1.0)
    value = entire + pole_diff
    if rem <= _tol_scale(cfg.target_abs_tol, value):
        return value
    if s.real < 0.0:
        refl, refl_rem = _pair_diff_reflect(s, a, cfg)
        if refl_rem < rem:
            value, rem = refl, refl_rem
    if rem > _tol_scale(cfg.target_abs_tol, value):
        _warn_accuracy(rem, cfg.target_abs_tol, s)
    return value


def _pair_diff_reflect(s: complex, a: float, cfg: EvalSettings) -> Tuple[complex, float]:
    """zeta(s,a) - zeta(s,1-a) for Re s < 0 through
    2 Gamma(w) (2pi)^{-w} sin(pi w/2) * (-i)(Li_w(e^{2pi i a}) - Li_w(e^{-2pi i a}))
    with w = 1 - s; both series converge absolutely and nothing cancels."""
    w = 1.0 - s
    eps = 2.220446049250313e-16
    la, ea = _li_series(w, a, cfg)
    lb, eb = _li_series(w, 1.0 - a, cfg)
    o_val = -1j * (la - lb)
    o_err = ea + eb + eps * (abs(la) + abs(lb))
    if abs(s.imag) < 600.0:
        factor = 2.0 * gamma(w) * cmath.exp(-w * math.log(_TWO_PI)) * cmath.sin(0.5 * math.pi * w)
        return factor * o_val, abs(factor) * o_err
    logpref = math.log(2.0) + log_gamma(w) - w * math.log(_TWO_PI)
    if o_val == 0.0:
        return 0.0 + 0.0j, 0.0
    value = cmath.exp(logpref + _log_sin_half(w) + cmath.log(o_val))
    return value, abs(value) * (o_err / max(abs(o_val), 1e-300) + eps)


def _log_sin_half(w: complex) -> complex:
    return _log_sin_pi(0.5 * w)


def hurwitz_pair_sum_minus_pole(s: complex, a: float, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """zeta(s,a) + zeta(s,1-a) minus both pole parts; entire in s."""
    s = require_finite(s)
    value, rem = _hurwitz_combination(s, (a, 1.0 - a), (1.0, 1.0), cfg, subtract_pole=True)
    if rem > _tol_scale(cfg.target_abs_tol, value):
        _warn_accuracy(rem, cfg.target_abs_tol, s)
    return value


def riemann_zeta(s: complex, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Riemann zeta as the a = 1 instance of the Hurwitz zeta."""
    return hurwitz_zeta(s, 1.0, cfg)


# ---------------------------------------------------------------------------
# Periodic zeta Li_s(e^{2 pi i a}).

def _unit_phases(indices: np.ndarray, a: float) -> np.ndarray:
    # e^{2 pi i a n} with the angle reduced mod 1 before exponentiating, so the
    # phase stays accurate for large n.
    return np.exp(2j * math.pi * np.mod(a * indices, 1.0))


def _li_series(s: complex, a: float, cfg: EvalSettings) -> Tuple[complex, float]:
    """Direct series plus Euler-transformed tail; returns (value, error estimate).

    The tail sum_{n>=N} z^n n^{-s} is folded by repeated summation by parts:
    each pass trades a factor ~ |s|/(N |1-z|), so N is chosen to make that
    factor small before the difference table is evaluated.
    """
    z = cmath.exp(2j * math.pi * a)
    one_minus_z = 1.0 - z
    gap = abs(one_minus_z)
    n0 = max(cfg.em_shift, 32, math.ceil(6.0 * (abs(s) + 4.0) / gap))
    tol = cfg.target_abs_tol
    m_max = 18

    best: Optional[Tuple[complex, float]] = None
    n = n0
    for attempt in range(3):
        idx = np.arange(1, n, dtype=float)
        direct = complex(np.sum(_unit_phases(idx, a) * np.exp(-s * np.log(idx))))

        j = np.arange(0, m_max + 1, dtype=float)
        table = np.exp(-s * np.log(n + j)).astype(complex)  # a_{N+j}, j = 0..m_max
        zpow = _unit_phases(np.arange(n, n + m_max + 1, dtype=float), a)

        # S_N = sum_k z^{N+k} (grad^k a)_{N+k} / (1-z)^{k+1}; table[0] after k
        # np.diff passes is exactly the k-th backward difference at index N+k.
        tail = 0.0 + 0.0j
        err = math.inf
        prev = math.inf
        inv = 1.0 / one_minus_z
        scale = inv
        for k in range(m_max + 1):
            term = zpow[k] * table[0] * scale
            mag = abs(term)
            if k > 0 and mag > prev:
                err = mag  # differences stopped helping; first omitted term bounds the rest
                break
            tail += term
            prev = mag
            err = mag
            if mag <= 0.05 * tol:
                break
            scale *= inv
            if table.size == 1:
                break
            table = np.diff(table)
        value = direct + tail
        if best is None or err < best[1]:
            best = (value, err)
        if err <= tol:
            return best
        n *= 2
    return best


def _li_rational(s: complex, r: int, q: int, cfg: EvalSettings) -> complex:
    """Exact finite form Li_s(e^{2 pi i r/q}) = q^{-s} sum_n e^{2 pi i rn/q} zeta(s, n/q)."""
    bases = tuple((n + 1) / q for n in range(q))
    weights = tuple(cmath.exp(2j * math.pi * ((r * (n + 1)) % q) / q) for n in range(q))
    entire, _ = _hurwitz_combination(s, bases, weights, cfg, subtract_pole=True)
    # Add back the subtracted pole parts; their residues cancel since sum w_j = 0.
    poles = 0.0 + 0.0j
    if s != 1.0:
        for b, w in zip(bases, weights):
            poles += w * cmath.exp((1.0 - s) * math.log(b))
        poles /= s - 1.0
    else:
        for b, w in zip(bases, weights):
            poles += w * -math.log(b)
    return cmath.exp(-s * math.log(q)) * (entire + poles)


def _li_functional_equation(s: complex, a: float, cfg: EvalSettings) -> complex:
    """Continuation Li_s = Gamma(1-s)/(2pi)^{1-s} [e^{i pi (1-s)/2} zeta(1-s,a)
    + e^{-i pi (1-s)/2} zeta(1-s,1-a)].

    Near s = 0 the two zeta factors blow up like 1/s against each other, so the
    pole parts are recombined through expm1 before anything large is formed.
    Far up the imaginary axis the e^{pi|t|/2} factors are paired in log space.
    """
    w = 1.0 - s
    half = 0.5j * math.pi * w

    if abs(s) < 0.25:
        fa = hurwitz_zeta_minus_pole(w, a, cfg)
        fb = hurwitz_zeta_minus_pole(w, 1.0 - a, cfg)
        # combined pole parts: i [e^{s v} - e^{s u}] / s  with
        # u = log a - i pi/2, v = log(1-a) + i pi/2
        u = math.log(a) - 0.5j * math.pi
        v = math.log(1.0 - a) + 0.5j * math.pi
        if s == 0.0:
            polepart = 1j * (v - u)
        else:
            polepart = 1j * cmath.exp(s * u) * _cexpm1(s * (v - u)) / s
        pref = gamma(w) * cmath.exp((s - 1.0) * math.log(_TWO_PI))
        return pref * (cmath.exp(half) * fa + cmath.exp(-half) * fb + polepart)

    za = hurwitz_zeta(w, a, cfg)
    zb = hurwitz_zeta(w, 1.0 - a, cfg)
    if abs(s.imag) < 600.0:
        pref = gamma(w) * cmath.exp((s - 1.0) * math.log(_TWO_PI))
        return pref * (cmath.exp(half) * za + cmath.exp(-half) * zb)
    logpref = log_gamma(w) + (s - 1.0) * math.log(_TWO_PI)
    out = 0.0 + 0.0j
    for term, sign in ((za, 1.0), (zb, -1.0)):
        if term != 0.0:
            out += cmath.exp(logpref + sign * half + cmath.log(term))
    return out


def periodic_zeta(s: complex, a: AlphaLike, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Periodic zeta Li_s(e^{2 pi i a}) for 0 < a < 1, entire in s.

    Strategy: exact value at s = 0; for Re s above the configured threshold
    either the accelerated direct series (float a) or the exact rational
    decomposition into Hurwitz zetas (exact a = r/q); otherwise the
    functional-equation route through zeta(1-s, .).
    """
    s = require_finite(s)
    alpha = Alpha.coerce(a)
    av = alpha.value
    if not 0.0 < av < 1.0:
        raise DomainError("periodic zeta needs 0 < a < 1 (a = 1 is the Riemann zeta)")
    if s == 0.0:
        # -1/2 + (i/2) cot(pi a): the s -> 0 limit of the continuation, equal to
        # z/(1-z) for z = e^{2 pi i a}.
        return complex(-0.5, 0.5 / math.tan(math.pi * av))
    if s.real > cfg.series_sigma_threshold:
        if alpha.exact is not None and abs(s - 1.0) > 5e-3:
            r, q = alpha.exact
            return _li_rational(s, r, q, cfg)
        value, err = _li_series(s, av, cfg)
        if err > _tol_scale(cfg.target_abs_tol, value):
            _warn_accuracy(err, cfg.target_abs_tol, s)
        return value
    return _li_functional_equation(s, av, cfg)
