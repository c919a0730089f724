"""Shared parameter types, family tags and exceptions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union


class ZetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZetaError, ValueError):
    """An argument is outside the domain of the requested operation."""


class PoleError(ZetaError):
    """Evaluation was requested at a pole.

    ``location`` is the pole position.  ``limits`` optionally carries the
    one-sided limits along the real axis as ``(left, right)`` when they are
    signed infinities (e.g. Z at s = 1).
    """

    def __init__(self, message: str, location: complex, limits: Optional[Tuple[float, float]] = None):
        super().__init__(message)
        self.location = location
        self.limits = limits


class UnsupportedError(ZetaError, ValueError):
    """The requested order / modulus / identity is outside the supported table."""


class ConvergenceError(ZetaError):
    """An iterative procedure failed to converge within its budget."""


class BoundaryError(ZetaError):
    """A contour passes too close to a zero; reposition the rectangle."""


class AccuracyWarning(UserWarning):
    """The internal remainder bound could not certify the requested tolerance."""


class Family(enum.Enum):
    """Which function is meant by an evaluation request."""

    HURWITZ = "hurwitz"
    PERIODIC = "periodic"
    RIEMANN = "riemann"
    Z = "Z"
    P = "P"
    Y = "Y"
    O = "O"
    X = "X"
    L_CHI = "L"

    @property
    def is_composed(self) -> bool:
        return self in (Family.Z, Family.P, Family.Y, Family.O, Family.X)

    @property
    def odd_symmetric(self) -> bool:
        """True for the families that flip sign under a -> 1 - a."""
        return self in (Family.Y, Family.O, Family.X)


_FAMILY_ALIASES = {f.value.lower(): f for f in Family}
_FAMILY_ALIASES.update({f.name.lower(): f for f in Family})
_FAMILY_ALIASES["l_chi"] = Family.L_CHI


def parse_family(text: str) -> Family:
    try:
        return _FAMILY_ALIASES[text.strip().lower()]
    except KeyError:
        raise DomainError(f"unknown family {text!r}") from None


@dataclass(frozen=True)
class Alpha:
    """The shift/rotation parameter a in (0, 1].

    ``exact`` carries a reduced fraction (r, q) when the value is known
    exactly; exact values unlock the rational fast paths (closed forms,
    character decompositions).  Plain floats never do, so 0.25 and "1/4"
    deliberately behave differently.
    """

    value: float
    exact: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if not (0.0 < self.value <= 1.0) or math.isnan(self.value):
            raise DomainError(f"alpha must lie in (0, 1], got {self.value!r}")
        if self.exact is not None:
            r, q = self.exact
            if q <= 0 or r <= 0 or r > q or math.gcd(r, q) != 1:
                raise DomainError(f"exact alpha must be a reduced fraction in (0, 1], got {r}/{q}")
            if self.value != r / q:
                raise DomainError(f"exact fraction {r}/{q} disagrees with value {self.value!r}")

    @staticmethod
    def coerce(x: Union["Alpha", float, int, Fraction, str]) -> "Alpha":
        if isinstance(x, Alpha):
            return x
        if isinstance(x, Fraction):
            return Alpha(float(x), (x.numerator, x.denominator))
        if isinstance(x, int):
            return Alpha(float(x), (x, 1))
        if isinstance(x, str):
            return Alpha.parse(x)
        return Alpha(float(x))

    @staticmethod
    def parse(text: str) -> "Alpha":
        """Parse "r/q" as an exact rational, anything else as a float."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            frac = Fraction(int(num), int(den))
            return Alpha(float(frac), (frac.numerator, frac.denominator))
        return Alpha(float(text))

    @property
    def fraction(self) -> Optional[Fraction]:
        if self.exact is None:
            return None
        return Fraction(*self.exact)

    def is_exactly(self, r: int, q: int) -> bool:
        return self.exact is not None and Fraction(*self.exact) == Fraction(r, q)

    @property
    def conjugate(self) -> "Alpha":
        """1 - a, exact when a is exact (a = 1 maps to itself)."""
        if self.exact is not None:
            r, q = self.exact
            if r == q:
                return self
            return Alpha(float(Fraction(q - r, q)), (q - r, q))
        return Alpha(1.0 - self.value)

    def __str__(self) -> str:
        if self.exact is not None:
            return f"{self.exact[0]}/{self.exact[1]}"
        return repr(self.value)


AlphaLike = Union[Alpha, float, int, Fraction, str]


@dataclass(frozen=True)
class EvalSettings:
    """Tuning knobs for the series/Euler-Maclaurin kernels.

    em_shift: directly summed terms before the Euler-Maclaurin correction
        (raised automatically with |Im s|, lowered for Re s < 0 where large
        direct terms would cancel catastrophically).
    em_order: number of Bernoulli correction terms (even; the engine may
        extend it internally when that certifies a smaller remainder).
    target_abs_tol: absolute tolerance the remainder bound must certify,
        else an AccuracyWarning is attached.
    series_sigma_threshold: Re s above which the periodic zeta uses the
        accelerated direct series instead of the functional equation.
    """

    em_shift: int = 25
    em_order: int = 12
    target_abs_tol: float = 1e-12
    series_sigma_threshold: float = 0.75

    def __post_init__(self):
        if self.em_shift < 1:
            raise DomainError("em_shift must be >= 1")
        if self.em_order < 2 or self.em_order % 2:
            raise DomainError("em_order must be a positive even integer")
        if not self.target_abs_tol > 0:
            raise DomainError("target_abs_tol must be > 0")


DEFAULT_SETTINGS = EvalSettings()


def require_finite(s: complex) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"point must be finite, got {s!r}")
    return s
