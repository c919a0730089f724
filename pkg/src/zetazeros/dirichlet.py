"""Dirichlet characters mod q, Gauss sums, L-functions, the linear relations
between L-functions and the composed families, and the rational closed forms.

Characters are built from the cyclic decomposition of (Z/qZ)*; generators are
found by brute-force order computation, which is plenty for q <= 100.  The
character list order is deterministic: lexicographic in the exponent tuple on
the fixed generator list, principal character first.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .core import (
    DEFAULT_SETTINGS,
    Alpha,
    AlphaLike,
    DomainError,
    EvalSettings,
    Family,
    PoleError,
    UnsupportedError,
    require_finite,
)
from .families import eval_family
from .special import hurwitz_zeta, riemann_zeta

MAX_MODULUS = 100

_TWO_PI = 2.0 * math.pi


def _root_of_unity(phase: Fraction) -> complex:
    """e^{2 pi i phase} with the cardinal values snapped exactly."""
    phase = phase % 1
    if phase == 0:
        return 1.0 + 0.0j
    if phase == Fraction(1, 2):
        return -1.0 + 0.0j
    if phase == Fraction(1, 4):
        return 0.0 + 1.0j
    if phase == Fraction(3, 4):
        return 0.0 - 1.0j
    return cmath.exp(2j * math.pi * float(phase))


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character chi mod q as an explicit value table.

    values[n] = chi(n) for n = 0..q-1; parity = chi(-1); exponents is the
    defining tuple on the generator list (the deterministic ordering key).
    """

    modulus: int
    values: Tuple[complex, ...]
    parity: int
    is_principal: bool
    is_primitive: bool
    conductor: int
    exponents: Tuple[int, ...]

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    def conj(self) -> "DirichletCharacter":
        return DirichletCharacter(
            modulus=self.modulus,
            values=tuple(v.conjugate() for v in self.values),
            parity=self.parity,
            is_principal=self.is_principal,
            is_primitive=self.is_primitive,
            conductor=self.conductor,
            exponents=self.exponents,
        )


def _prime_power_factors(q: int) -> List[Tuple[int, int]]:
    out = []
    n = q
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _multiplicative_order(g: int, mod: int) -> int:
    x = g % mod
    order = 1
    while x != 1:
        x = (x * g) % mod
        order += 1
    return order


def _primitive_root(pe: int, phi: int) -> int:
    for g in range(2, pe):
        if math.gcd(g, pe) == 1 and _multiplicative_order(g, pe) == phi:
            return g
    raise RuntimeError(f"no primitive root mod {pe}")  # unreachable for p^e, p odd


def _unit_group_generators(q: int) -> List[Tuple[int, int]]:
    """[(generator mod q, order)] for the cyclic decomposition of (Z/qZ)*.

    The 2-part contributes (-1, 2) and (3, 2^{e-2}) for 2^e with e >= 3.
    Generators for distinct prime powers are combined through the CRT lift
    g == gen (mod p^e), g == 1 (mod q / p^e).
    """
    gens: List[Tuple[int, int]] = []
    for p, e in _prime_power_factors(q):
        pe = p**e
        rest = q // pe
        local: List[Tuple[int, int]] = []
        if p == 2:
            if e == 2:
                local.append((3, 2))
            elif e >= 3:
                local.append((pe - 1, 2))
                local.append((3, 2 ** (e - 2)))
        else:
            phi = pe - pe // p
            local.append((_primitive_root(pe, phi), phi))
        for g, order in local:
            if rest == 1:
                gens.append((g % q, order))
            else:
                # CRT lift: g mod pe, 1 mod rest
                inv = pow(rest, -1, pe)
                lifted = (1 + rest * ((inv * (g - 1)) % pe)) % q
                gens.append((lifted, order))
    return gens


@lru_cache(maxsize=None)
def _character_data(q: int) -> Tuple[DirichletCharacter, ...]:
    if q < 1:
        raise DomainError("modulus must be positive")
    if q > MAX_MODULUS:
        raise UnsupportedError(f"characters supported only for q <= {MAX_MODULUS}")
    if q == 1:
        chi = DirichletCharacter(1, (1.0 + 0.0j,), 1, True, True, 1, ())
        return (chi,)

    gens = _unit_group_generators(q)
    orders = [d for _, d in gens]

    # discrete log table: unit n -> exponent tuple on the generators
    dlog: Dict[int, Tuple[int, ...]] = {}

    def fill(idx: int, value: int, exps: Tuple[int, ...]):
        if idx == len(gens):
            dlog[value] = exps
            return
        g, order = gens[idx]
        acc = 1
        for e in range(order):
            fill(idx + 1, (value * acc) % q, exps + (e,))
            acc = (acc * g) % q

    fill(0, 1, ())

    divisors = [d for d in range(1, q + 1) if q % d == 0]
    chars: List[DirichletCharacter] = []

    def exponent_tuples(idx: int):
        if idx == len(orders):
            yield ()
            return
        for head in range(orders[idx]):
            for rest in exponent_tuples(idx + 1):
                yield (head,) + rest

    for ks in sorted(exponent_tuples(0)):
        values: List[complex] = []
        for n in range(q):
            if math.gcd(n, q) != 1:
                values.append(0.0 + 0.0j)
            else:
                exps = dlog[n]
                phase = sum(Fraction(k * e, d) for k, e, d in zip(ks, exps, orders))
                values.append(_root_of_unity(phase))
        parity = 1 if abs(values[(q - 1) % q] - 1.0) < 1e-9 else -1
        principal = all(ks_i == 0 for ks_i in ks)
        conductor = q
        for d in divisors:
            # chi is induced mod d iff chi(n) = 1 whenever n == 1 (mod d), gcd(n,q)=1
            if all(
                abs(values[n] - 1.0) < 1e-9
                for n in range(q)
                if math.gcd(n, q) == 1 and n % d == 1 % d
            ):
                conductor = d
                break
        chars.append(
            DirichletCharacter(
                modulus=q,
                values=tuple(values),
                parity=parity,
                is_principal=principal,
                is_primitive=(conductor == q),
                conductor=conductor,
                exponents=ks,
            )
        )
    # principal first, then lexicographic exponents (sorted() above handles both)
    return tuple(chars)


def characters_mod(q: int) -> List[DirichletCharacter]:
    """All phi(q) Dirichlet characters mod q, deterministic order, q <= 100."""
    return list(_character_data(q))


def euler_phi(q: int) -> int:
    return sum(1 for n in range(1, q + 1) if math.gcd(n, q) == 1)


def gauss_sum(chi: DirichletCharacter) -> complex:
    """G(chi) = sum_{r=1}^{q} chi(r) e^{2 pi i r / q}, direct O(q) sum."""
    q = chi.modulus
    total = 0.0 + 0.0j
    for r in range(1, q + 1):
        v = chi(r)
        if v != 0.0:
            total += v * _root_of_unity(Fraction(r, q))
    return total


def l_function(chi: DirichletCharacter, s: complex, cfg: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """L(s, chi) = q^{-s} sum_r chi(r) zeta(s, r/q)."""
    s = require_finite(s)
    q = chi.modulus
    if chi.is_principal and s == 1.0:
        raise PoleError("L(s, chi0) inherits the zeta pole at s = 1", 1.0 + 0.0j)
    if q == 1:
        return riemann_zeta(s, cfg)
    total = 0.0 + 0.0j
    for r in range(1, q + 1):
        v = chi(r)
        if v != 0.0:
            total += v * hurwitz_zeta(s, r / q, cfg)
    return total * cmath.exp(-s * math.log(q))


def chi_minus3() -> DirichletCharacter:
    """The odd character mod 3 (1, -1 pattern)."""
    return characters_mod(3)[1]


def chi_minus4() -> DirichletCharacter:
    """The odd character mod 4 (1 at 1 mod 4, -1 at 3 mod 4)."""
    return characters_mod(4)[1]


def chi_minus6() -> DirichletCharacter:
    """The odd character mod 6 (1 at 1 mod 6, -1 at 5 mod 6)."""
    return characters_mod(6)[1]


# ---------------------------------------------------------------------------
# Linear relations in both directions.

def _family_at_fraction(fam: Family, s: complex, r: int, q: int, cfg: EvalSettings) -> complex:
    """family(s, r/q) for any 0 < r < q, using the a <-> 1-a symmetry to reach
    the (0, 1/2] domain of the composed families."""
    if 2 * r <= q:
        return eval_family(fam, s, Alpha.coerce(Fraction(r, q)), cfg)
    value = eval_family(fam, s, Alpha.coerce(Fraction(q - r, q)), cfg)
    return -value if fam.odd_symmetric else value


def linear_relation_residual(
    fam: Family,
    r: int,
    q: int,
    s: complex,
    cfg: EvalSettings = DEFAULT_SETTINGS,
    direction: str = "family_from_l",
) -> float:
    """Residual of the character-sum linear relations, both sides independent.

    direction="family_from_l": |family(s, r/q) - character-sum side| with

        Z(s,r/q) = q^s/phi(q) sum_chi (1+chi(-1)) conj(chi)(r) L(s,chi)
        Y(s,r/q) = q^s/phi(q) sum_chi (1-chi(-1)) conj(chi)(r) L(s,chi)
        P(s,r/q) = 1/phi(q) sum_chi (1+chi(-1)) chi(r) G(conj chi) L(s,chi)
                   + q^{-s} sum_{gcd(n,q)>1} 2 cos(2 pi r n/q) zeta(s, n/q)
        O(s,r/q) = -i/phi(q) sum_chi (1-chi(-1)) chi(r) G(conj chi) L(s,chi)
                   + q^{-s} sum_{gcd(n,q)>1} 2 sin(2 pi r n/q) zeta(s, n/q)

    The chi(r) factor and the non-coprime completion sums are required for the
    P/O lines to hold for every q (the Gauss-sum expansion of e^{2 pi i rn/q}
    only covers residues coprime to q); without them the residual at q = 5,
    r = 1 is exactly 2 q^{-s} zeta(s).

    direction="l_from_family": max over chi of the matching parity of

        L(s,chi) = 1/(2 q^s) sum_r chi(r) Z(s,r/q)          (chi even; Y, odd)
        L(s,chi) = 1/(2 G(conj chi)) sum_r conj(chi)(r) P(s,r/q)    (even)
        L(s,chi) = +i/(2 G(conj chi)) sum_r conj(chi)(r) O(s,r/q)   (odd)

    The O inversion carries +i, not -i: unfolding with chi odd gives
    2 G(conj chi) L = sum_r conj(chi)(r) [Li(r/q) - Li((q-r)/q)] = i sum_r
    conj(chi)(r) O(s, r/q), consistent with O(s, 1/4) = 2 L(s, chi mod 4).
    The Z/Y inversions hold for every character; the P/O inversions rely on
    G(conj chi, n) = chi(n) G(conj chi) for all n, i.e. on chi primitive, and
    are checked for primitive characters only.
    """
    s = require_finite(s)
    if math.gcd(r, q) != 1 or not 0 < r < q:
        raise DomainError("need 0 < r < q with gcd(r, q) = 1")
    if fam in (Family.Y, Family.O) and not 0 < 2 * r < q:
        raise DomainError("odd-family relations need 0 < 2r < q")
    if fam not in (Family.Z, Family.P, Family.Y, Family.O):
        raise DomainError(f"linear relations cover Z, P, Y, O; got {fam}")
    chars = characters_mod(q)
    phi = len(chars)

    if direction == "family_from_l":
        lhs = _family_at_fraction(fam, s, r, q, cfg)
        total = 0.0 + 0.0j
        for chi in chars:
            parity_factor = 1 + chi.parity if fam in (Family.Z, Family.P) else 1 - chi.parity
            if parity_factor == 0:
                continue
            if chi.is_principal and s == 1.0:
                raise PoleError("principal L pole at s = 1", 1.0 + 0.0j)
            lval = l_function(chi, s, cfg)
            if fam in (Family.Z, Family.Y):
                total += parity_factor * chi.conj()(r) * lval
            else:
                total += parity_factor * chi(r) * gauss_sum(chi.conj()) * lval
        if fam in (Family.Z, Family.Y):
            rhs = cmath.exp(s * math.log(q)) / phi * total
        else:
            rhs = (total if fam is Family.P else -1j * total) / phi
            completion = 0.0 + 0.0j
            for n in range(1, q + 1):
                if math.gcd(n, q) > 1:
                    angle = 2.0 * math.pi * ((r * n) % q) / q
                    weight = 2.0 * math.cos(angle) if fam is Family.P else 2.0 * math.sin(angle)
                    completion += weight * hurwitz_zeta(s, n / q, cfg)
            rhs += cmath.exp(-s * math.log(q)) * completion
        return abs(lhs - rhs)

    if direction == "l_from_family":
        worst = 0.0
        want_parity = 1 if fam in (Family.Z, Family.P) else -1
        for chi in chars:
            if chi.parity != want_parity:
                continue
            if chi.is_principal and s == 1.0:
                continue
            if fam in (Family.P, Family.O) and not chi.is_primitive:
                continue
            lhs = l_function(chi, s, cfg)
            total = 0.0 + 0.0j
            for rr in range(1, q):
                if math.gcd(rr, q) != 1:
                    continue
                if fam in (Family.Z, Family.Y):
                    total += chi(rr) * _family_at_fraction(fam, s, rr, q, cfg)
                else:
                    total += chi.conj()(rr) * _family_at_fraction(fam, s, rr, q, cfg)
            if fam in (Family.Z, Family.Y):
                rhs = total / (2.0 * cmath.exp(s * math.log(q)))
            elif fam is Family.P:
                rhs = total / (2.0 * gauss_sum(chi.conj()))
            else:
                rhs = 1j * total / (2.0 * gauss_sum(chi.conj()))
            worst = max(worst, abs(lhs - rhs))
        return worst

    raise DomainError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# Closed forms at a = 1/2, 1/3, 1/4, 1/6.

def f_factor(s: complex) -> complex:
    """f(s) = 3^s / sqrt(3); |f| = 1 exactly on the critical line."""
    s = require_finite(s)
    return cmath.exp(s * math.log(3.0)) / math.sqrt(3.0)


def g_factor(s: complex) -> complex:
    """g(s) = (1 + 2^{1-s}) / (1 + 2^s); |g| = 1 on the critical line,
    < 1 to its right, > 1 to its left; g(1-s) g(s) = 1.

    Poles sit on sigma = 0 at t = pi (2k+1) / log 2."""
    s = require_finite(s)
    denom = 1.0 + cmath.exp(s * math.log(2.0))
    if abs(denom) < 1e-9:
        raise DomainError(f"g(s) pole: 1 + 2^s = 0 at s = {s!r}")
    return (1.0 + cmath.exp((1.0 - s) * math.log(2.0))) / denom


def _two(s: complex) -> complex:
    return cmath.exp(s * math.log(2.0))


def _three(s: complex) -> complex:
    return cmath.exp(s * math.log(3.0))


def _closed_form_value(fam: Family, frac: Fraction, s: complex, cfg: EvalSettings) -> complex:
    two_s, three_s = _two(s), _three(s)
    two_t, three_t = _two(1.0 - s), _three(1.0 - s)
    rt3 = math.sqrt(3.0)
    if fam is Family.Z:
        if s == 1.0:
            raise PoleError("closed form for Z has the zeta pole at s = 1", 1.0 + 0.0j)
        zs = riemann_zeta(s, cfg)
        table = {
            Fraction(1, 2): 2.0 * (two_s - 1.0) * zs,
            Fraction(1, 3): (three_s - 1.0) * zs,
            Fraction(1, 4): two_s * (two_s - 1.0) * zs,
            Fraction(1, 6): (two_s - 1.0) * (three_s - 1.0) * zs,
        }
        if frac in table:
            return table[frac]
    if fam is Family.P:
        if s == 1.0:
            # (2^{1-s}-1)(3^{1-s}-1) style prefactors vanish at s=1 against the
            # zeta pole; P(1, a) is covered by special_values instead.
            raise PoleError("closed form for P uses zeta(s), singular at s = 1", 1.0 + 0.0j)
        zs = riemann_zeta(s, cfg)
        table = {
            Fraction(1, 2): 2.0 * (two_t - 1.0) * zs,
            Fraction(1, 3): (three_t - 1.0) * zs,
            Fraction(1, 4): two_t * (two_t - 1.0) * zs,
            Fraction(1, 6): (two_t - 1.0) * (three_t - 1.0) * zs,
        }
        if frac in table:
            return table[frac]
    if fam in (Family.Y, Family.O, Family.X):
        if frac == Fraction(1, 2):
            return 0.0 + 0.0j
        if frac == Fraction(1, 3):
            l3 = l_function(chi_minus3(), s, cfg)
            return {Family.Y: three_s, Family.O: rt3 + 0.0j, Family.X: three_s + rt3}[fam] * l3
        if frac == Fraction(1, 4):
            # the chi_{-4} decomposition: Y = 4^s L, O = 2 L, X = (4^s + 2) L
            l4 = l_function(chi_minus4(), s, cfg)
            four_s = cmath.exp(s * math.log(4.0))
            return {Family.Y: four_s, Family.O: 2.0 + 0.0j, Family.X: four_s + 2.0}[fam] * l4
        if frac == Fraction(1, 6):
            l3 = l_function(chi_minus3(), s, cfg)
            six_s = cmath.exp(s * math.log(6.0))
            coeff = {
                Family.Y: six_s + three_s,
                Family.O: rt3 * (1.0 + two_t),
                Family.X: six_s + three_s + rt3 * (1.0 + two_t),
            }[fam]
            return coeff * l3
    raise UnsupportedError(f"no closed form for family {fam.name} at a = {frac}")


def closed_form_identity(
    fam: Family, a: AlphaLike, s: complex, cfg: EvalSettings = DEFAULT_SETTINGS
) -> Tuple[complex, complex]:
    """(direct kernel evaluation, closed-form evaluation) for comparison.

    Covered: Z and P at a in {1/2, 1/3, 1/4, 1/6}; Y, O, X at {1/2, 1/3,
    1/4, 1/6} through L(s, chi_{-3}) / L(s, chi_{-4}).
    """
    s = require_finite(s)
    alpha = Alpha.coerce(a)
    if alpha.exact is None:
        raise UnsupportedError("closed forms require an exact rational a (use \"r/q\" syntax)")
    frac = Fraction(*alpha.exact)
    closed = _closed_form_value(fam, frac, s, cfg)
    direct = eval_family(fam, s, alpha, cfg)
    return direct, closed
