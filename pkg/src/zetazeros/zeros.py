"""Real-zero scanning and classification, location of the extra real zeros of
Z and P, asymptotic predictions, the Bernoulli-sign interval criterion, and
argument-principle zero counting in rectangles.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .core import (
    Alpha,
    AlphaLike,
    BoundaryError,
    ConvergenceError,
    DomainError,
    EvalSettings,
    Family,
    PoleError,
    UnsupportedError,
)
from .families import eval_family
from .special import bernoulli_poly, bernoulli_poly_exact, gamma

SIMPLE = "simple-sign-change"
EVEN_TOUCH = "even-touch"
UNRESOLVED = "unresolved"

# Tolerance used by the family kernels during sweeps; zero locations are pinned
# to 1e-10 brackets, so certifying 1e-12 per evaluation is unnecessary noise.
_SCAN_SETTINGS = EvalSettings(target_abs_tol=1e-10)

_DEFAULT_STEP = 0.05
_TOUCH_TOL = 1e-6
_BRACKET_WIDTH = 1e-10
_GRID_ZERO_TOL = 1e-9


@dataclass(frozen=True)
class ZeroRecord:
    """One located real zero (or |f| touch point) of a family section."""

    location: float
    multiplicity_class: str
    bracket: Tuple[float, float]
    residual: float


@dataclass(frozen=True)
class BetaCurvePoint:
    """The extra real zero of Z or P at shift a, with its asymptotic prediction."""

    a: float
    family: Family
    beta: float
    asymptotic_prediction: float
    deviation: float


@dataclass(frozen=True)
class RectangleCount:
    """Argument-principle zero count inside an axis-aligned rectangle."""

    corners: Tuple[complex, complex]
    count: int
    boundary_min_abs: float
    samples_used: int
    winding_error: float


def _real_section(fam: Family, a: Alpha, cfg: EvalSettings) -> Callable[[float], float]:
    def f(x: float) -> float:
        return eval_family(fam, complex(x, 0.0), a, cfg).real

    return f


def _abs_section(fam: Family, a: Alpha, cfg: EvalSettings) -> Callable[[float], float]:
    def f(x: float) -> float:
        return abs(eval_family(fam, complex(x, 0.0), a, cfg))

    return f


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float, width: float) -> Tuple[float, float]:
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid - 0.25 * width, mid + 0.25 * width
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def _refine_touch(g: Callable[[float], float], lo: float, hi: float, width: float) -> float:
    """Golden-section minimum of |f| on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    gc, gd = g(c), g(d)
    while hi - lo > width:
        if gc < gd:
            hi, d, gd = d, c, gc
            c = hi - invphi * (hi - lo)
            gc = g(c)
        else:
            lo, c, gc = c, d, gd
            d = lo + invphi * (hi - lo)
            gd = g(d)
    return 0.5 * (lo + hi)


def scan_real_zeros(
    fam: Family,
    a: AlphaLike,
    lo: float,
    hi: float,
    step: float = _DEFAULT_STEP,
    cfg: EvalSettings = _SCAN_SETTINGS,
    touch_tol: float = _TOUCH_TOL,
) -> List[ZeroRecord]:
    """Scan [lo, hi] for real zeros of the family section.

    Sign changes are bisected to brackets narrower than 1e-10 and reported as
    simple; local |f| minima that dip below touch_tol without a sign change
    are reported as even-touch (this is what catches double zeros).  For the
    complex-valued periodic zeta only the |f| dip detection applies.

    An interval containing the s = 1 pole (Z, Hurwitz, Riemann) is split
    around it and a warning is emitted.
    """
    if not lo < hi:
        raise DomainError("need lo < hi")
    if not step > 0.0:
        raise DomainError("need step > 0")
    alpha = Alpha.coerce(a)

    has_pole = fam in (Family.Z, Family.HURWITZ, Family.RIEMANN)
    if has_pole and lo < 1.0 < hi:
        warnings.warn(
            f"scan interval [{lo}, {hi}] contains the s = 1 pole; splitting around it",
            UserWarning,
            stacklevel=2,
        )
        gap = max(step / 4.0, 1e-6)
        return scan_real_zeros(fam, alpha, lo, 1.0 - gap, step, cfg, touch_tol) + scan_real_zeros(
            fam, alpha, 1.0 + gap, hi, step, cfg, touch_tol
        )
    if has_pole and (lo == 1.0 or hi == 1.0):
        raise PoleError("scan endpoint sits on the s = 1 pole", 1.0 + 0.0j)

    n = max(2, int(round((hi - lo) / step)) + 1)
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]

    records: List[ZeroRecord] = []

    if fam is Family.PERIODIC:
        g = _abs_section(fam, alpha, cfg)
        vals = [g(x) for x in xs]
        for i in range(1, n - 1):
            if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1] and vals[i] < touch_tol:
                loc = _refine_touch(g, xs[i - 1], xs[i + 1], _BRACKET_WIDTH)
                records.append(ZeroRecord(loc, EVEN_TOUCH, (xs[i - 1], xs[i + 1]), g(loc)))
        return records

    f = _real_section(fam, alpha, cfg)
    vals = [f(x) for x in xs]

    i = 0
    while i < n - 1:
        x0, x1 = xs[i], xs[i + 1]
        v0, v1 = vals[i], vals[i + 1]
        if abs(v0) < _GRID_ZERO_TOL:
            # grid point lands (numerically) on a zero; classify by neighbors
            left = f(x0 - 0.25 * step) if i == 0 else vals[i - 1]
            right = v1 if abs(v1) >= _GRID_ZERO_TOL else f(x1 + 0.25 * step)
            if left == 0.0 or right == 0.0 or (left < 0.0) != (right < 0.0):
                records.append(ZeroRecord(x0, SIMPLE, (x0 - 0.5 * step, x0 + 0.5 * step), abs(v0)))
            else:
                records.append(ZeroRecord(x0, EVEN_TOUCH, (x0 - 0.5 * step, x0 + 0.5 * step), abs(v0)))
            i += 1
            continue
        if v0 * v1 < 0.0:
            blo, bhi = _bisect(f, x0, x1, v0, _BRACKET_WIDTH)
            loc = 0.5 * (blo + bhi)
            records.append(ZeroRecord(loc, SIMPLE, (blo, bhi), abs(f(loc))))
        elif 0 < i and abs(v0) < abs(vals[i - 1]) and abs(v0) <= abs(v1):
            # candidate |f| dip without sign change around x0
            g = lambda x: abs(f(x))
            loc = _refine_touch(g, xs[i - 1], x1, 1e-8)
            resid = g(loc)
            if resid < touch_tol:
                records.append(ZeroRecord(loc, EVEN_TOUCH, (xs[i - 1], x1), resid))
        i += 1
    # de-duplicate records closer than half a step (touch refinement overlap)
    records.sort(key=lambda rec: rec.location)
    dedup: List[ZeroRecord] = []
    for rec in records:
        if dedup and abs(rec.location - dedup[-1].location) < 0.5 * step:
            if rec.residual < dedup[-1].residual:
                dedup[-1] = rec
            continue
        dedup.append(rec)
    return dedup


# ---------------------------------------------------------------------------
# The extra real zero beta_P(a) / beta_Z(a) for 0 < a < 1/4.

def _p_section(a: Alpha, cfg: EvalSettings) -> Callable[[float], float]:
    def f(sigma: float) -> float:
        return eval_family(Family.P, complex(sigma, 0.0), a, cfg).real

    return f


def monotone_kernel(sigma: float, a: AlphaLike, cfg: EvalSettings = _SCAN_SETTINGS) -> float:
    """alpha^{-sigma} Gamma(sigma) P(sigma, a) with alpha = -log cos 2 pi a.

    Strictly increasing in sigma > 0 for 0 < a <= 1/4, which is what makes
    sign bisection for beta_P rigorous rather than heuristic.
    """
    alpha = Alpha.coerce(a)
    if not 0.0 < alpha.value <= 0.25:
        raise DomainError("monotone kernel needs 0 < a <= 1/4")
    if sigma <= 0.0:
        raise DomainError("monotone kernel needs sigma > 0")
    c = -math.log(math.cos(2.0 * math.pi * alpha.value))
    p = eval_family(Family.P, complex(sigma, 0.0), alpha, cfg).real
    return math.exp(-sigma * math.log(c)) * gamma(complex(sigma, 0.0)).real * p


def asymptotic_prediction(fam: Family, a: AlphaLike) -> float:
    """Main terms of the beta asymptotics (no error term).

    Small a (a < 1/6):   beta_Z ~ 1 - 2a + 4a^2 log a,  beta_P ~ 2a - 4a^2 log a.
    a -> 1/4 (a > 1/6):  beta_P ~ -log(cos 2 pi a)/log 2,
                         beta_Z ~ 1 + log(cos 2 pi a)/log 2.

    The a^2 log a coefficient is 4, not 2: expanding a^beta = a e^{(beta-1) log a}
    with beta - 1 = -2a + ... in beta - 1 = -2 a^beta makes the cross term
    -2 (beta-1) a log a = +4 a^2 log a, and 50-digit bisection confirms the
    residual is O(a^2) only with this constant.
    """
    alpha = Alpha.coerce(a)
    av = alpha.value
    if fam not in (Family.Z, Family.P):
        raise DomainError("asymptotic predictions exist for Z and P only")
    if not 0.0 < av < 0.25:
        raise DomainError("asymptotic predictions cover 0 < a < 1/4")
    if av <= 1.0 / 6.0:
        beta_p = 2.0 * av - 4.0 * av * av * math.log(av)
    else:
        beta_p = -math.log(math.cos(2.0 * math.pi * av)) / math.log(2.0)
    return beta_p if fam is Family.P else 1.0 - beta_p


def beta_zero(fam: Family, a: AlphaLike, cfg: EvalSettings = _SCAN_SETTINGS) -> BetaCurvePoint:
    """Locate beta_P(a) by sign bisection on the monotone kernel and return
    the requested family's curve point (beta_Z = 1 - beta_P).

    a = 1/6 exactly returns the boundary values beta_P = 1, beta_Z = 0.
    """
    if fam not in (Family.Z, Family.P):
        raise DomainError("beta curves exist for Z and P only")
    alpha = Alpha.coerce(a)
    av = alpha.value
    if not 0.0 < av < 0.25:
        raise DomainError("beta zero defined for 0 < a < 1/4")

    if alpha.is_exactly(1, 6):
        beta_p = 1.0
    else:
        # sign(kernel) = sign(P) for sigma > 0 since alpha^{-sigma} Gamma > 0
        f = _p_section(alpha, cfg)
        if av < 1.0 / 6.0:
            lo, hi = 1e-12, 1.0
            flo = -1.0  # P -> -1 at sigma = 0+
        else:
            lo = 1.0
            flo = f(lo)
            hi = 2.0
            while f(hi) <= 0.0:
                lo = hi
                flo = f(lo)
                hi *= 2.0
                if hi > 2.0**40:
                    raise ConvergenceError("no sign change found for beta_P bracket")
        blo, bhi = _bisect(f, lo, hi, flo, _BRACKET_WIDTH)
        beta_p = 0.5 * (blo + bhi)

    beta = beta_p if fam is Family.P else 1.0 - beta_p
    try:
        pred = asymptotic_prediction(fam, alpha)
    except DomainError:
        pred = math.nan
    return BetaCurvePoint(a=av, family=fam, beta=beta, asymptotic_prediction=pred, deviation=abs(beta - pred))


# ---------------------------------------------------------------------------
# Bernoulli-sign interval criterion for real zeros of zeta(s, a).

def interval_zero_criterion(a: AlphaLike, n: int) -> bool:
    """Does zeta(sigma, a) have a real zero in the open interval (-n-1, -n)?

    Decided by the sign product B_{n+1}(a) B_{n+2}(a) < 0 (exact rational
    arithmetic when a is exact).  The criterion covers n >= -1: the endpoint
    values are zeta(-m, a) = -B_{m+1}(a)/(m+1), with n = -1 giving (0, 1)
    where B_0 = 1 stands in for the sign of the pole limit at 1-.  For
    n <= -2 the interval lies in sigma > 1 where the series is positive, so
    the answer is False.
    """
    alpha = Alpha.coerce(a)
    if n <= -2:
        return False
    if n + 2 > 60:
        raise UnsupportedError("Bernoulli table covers indices up to 60")
    if alpha.exact is not None:
        x = Fraction(*alpha.exact)
        prod_sign = bernoulli_poly_exact(n + 1, x) * bernoulli_poly_exact(n + 2, x)
        return prod_sign < 0
    return bernoulli_poly(n + 1, alpha.value) * bernoulli_poly(n + 2, alpha.value) < 0.0


# ---------------------------------------------------------------------------
# Argument-principle zero counting.

_BOUNDARY_MIN_ABS = 1e-6
_POLE_CLEARANCE = 1e-2
_WINDING_INT_TOL = 1e-3
_MAX_REFINE_DEPTH = 40


def _rectangle_path(c0: complex, c1: complex, samples: int) -> List[complex]:
    """Counterclockwise boundary samples, corner-to-corner, closed."""
    x0, x1 = min(c0.real, c1.real), max(c0.real, c1.real)
    y0, y1 = min(c0.imag, c1.imag), max(c0.imag, c1.imag)
    width, height = x1 - x0, y1 - y0
    per_unit = max(samples, 8) / max(2.0 * (width + height), 1e-12)
    pts: List[complex] = []
    edges = [
        (complex(x0, y0), complex(x1, y0)),
        (complex(x1, y0), complex(x1, y1)),
        (complex(x1, y1), complex(x0, y1)),
        (complex(x0, y1), complex(x0, y0)),
    ]
    for start, end in edges:
        n_edge = max(2, int(math.ceil(abs(end - start) * per_unit)))
        for i in range(n_edge):
            pts.append(start + (end - start) * i / n_edge)
    pts.append(pts[0])
    return pts


def _winding_pass(
    f: Callable[[complex], complex], pts: List[complex]
) -> Tuple[float, float, int]:
    """(total argument / 2pi, min |f|, evaluations); subdivides segments until
    every argument increment is below pi/2."""
    values = [f(p) for p in pts]
    evals = len(pts)
    min_abs = min(abs(v) for v in values)
    total = 0.0
    for i in range(len(pts) - 1):
        seg = [(pts[i], values[i]), (pts[i + 1], values[i + 1])]
        stack = [(seg[0], seg[1], 0)]
        while stack:
            (pa, va), (pb, vb), depth = stack.pop()
            if va == 0.0 or vb == 0.0:
                raise BoundaryError("zero on the rectangle boundary; reposition the rectangle")
            d_arg = cmath.phase(vb / va)
            if abs(d_arg) <= 0.5 * math.pi or depth >= _MAX_REFINE_DEPTH:
                if depth >= _MAX_REFINE_DEPTH:
                    raise BoundaryError(
                        "argument increment will not settle; a zero is too close to the boundary"
                    )
                total += d_arg
            else:
                pm = 0.5 * (pa + pb)
                vm = f(pm)
                evals += 1
                min_abs = min(min_abs, abs(vm))
                stack.append(((pm, vm), (pb, vb), depth + 1))
                stack.append(((pa, va), (pm, vm), depth + 1))
    return total / (2.0 * math.pi), min_abs, evals


def count_zeros_rectangle(
    fam: Family,
    a: AlphaLike,
    corners: Tuple[complex, complex],
    initial_samples: int = 512,
    cfg: EvalSettings = _SCAN_SETTINGS,
) -> RectangleCount:
    """Count zeros of the family inside a rectangle by boundary winding number.

    Samples along the boundary are doubled until the accumulated argument is
    within 1e-3 of an integer multiple of 2 pi and the integer is stable under
    one further doubling.  Boundaries closer than 1e-6 in |f| (or rectangles
    within 0.01 of the Z pole at s = 1) are rejected.
    """
    alpha = Alpha.coerce(a)
    c0, c1 = complex(corners[0]), complex(corners[1])
    x0, x1 = min(c0.real, c1.real), max(c0.real, c1.real)
    y0, y1 = min(c0.imag, c1.imag), max(c0.imag, c1.imag)
    if x0 == x1 or y0 == y1:
        raise DomainError("rectangle is degenerate")
    if fam in (Family.Z, Family.HURWITZ, Family.RIEMANN):
        if x0 - _POLE_CLEARANCE <= 1.0 <= x1 + _POLE_CLEARANCE and y0 - _POLE_CLEARANCE <= 0.0 <= y1 + _POLE_CLEARANCE:
            raise DomainError("rectangle must keep distance >= 0.01 from the pole at s = 1")

    def f(s: complex) -> complex:
        return eval_family(fam, s, alpha, cfg)

    samples = max(int(initial_samples), 64)
    prev_count: Optional[int] = None
    total_evals = 0
    for _ in range(8):
        winding, min_abs, evals = _winding_pass(f, _rectangle_path(c0, c1, samples))
        total_evals += evals
        if min_abs < _BOUNDARY_MIN_ABS:
            raise BoundaryError(
                f"min |f| on the boundary is {min_abs:.3g} < {_BOUNDARY_MIN_ABS}; reposition the rectangle"
            )
        nearest = round(winding)
        err = abs(winding - nearest)
        if err < _WINDING_INT_TOL:
            if prev_count is not None and prev_count == nearest:
                return RectangleCount(
                    corners=(complex(x0, y0), complex(x1, y1)),
                    count=int(nearest),
                    boundary_min_abs=min_abs,
                    samples_used=total_evals,
                    winding_error=err,
                )
            prev_count = int(nearest)
        else:
            prev_count = None
        samples *= 2
    raise ConvergenceError("winding number did not stabilize under sample doubling")
