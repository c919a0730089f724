"""Scanning, beta curves, the interval criterion, and rectangle counting.

High-precision constants (beta values, the double-zero shift a_1) come from
tests/oracles/make_reference.py (mpmath, 50-digit bisection).
"""

import math

import numpy as np
import pytest

from zetazeros import (
    Alpha,
    BoundaryError,
    DomainError,
    Family,
    beta_zero,
    asymptotic_prediction,
    count_zeros_rectangle,
    eval_family,
    interval_zero_criterion,
    scan_real_zeros,
)
from zetazeros.zeros import EVEN_TOUCH, SIMPLE

# 50-digit oracle values
BETA_Z_ORACLE = {
    0.005: 0.9894914817762648038,
    0.01: 0.9781621031730623000,
    0.02: 0.9532644433450316529,
}
BETA_P_2499_ORACLE = 10.63535576526834201
A1_DOUBLE_ZERO = 0.2308296502521382385  # P(3, a_1) = 0, so Z(., a_1) has a double zero at -2


def locations(records):
    return [rec.location for rec in records]


def test_scan_y_negative_odd_integers():
    recs = scan_real_zeros(Family.Y, 0.3, -10.0, 2.0)
    assert [round(x) for x in locations(recs)] == [-9, -7, -5, -3, -1]
    for rec in recs:
        assert rec.multiplicity_class == SIMPLE
        assert abs(rec.location - round(rec.location)) < 1e-8
        assert rec.residual < 1e-9


def test_scan_z_nonpositive_even_integers():
    recs = scan_real_zeros(Family.Z, 0.3, -9.0, 0.99)
    assert [round(x) for x in locations(recs)] == [-8, -6, -4, -2, 0]
    for rec in recs:
        assert abs(rec.location - round(rec.location)) < 1e-8


def test_scan_periodic_finds_nothing():
    assert scan_real_zeros(Family.PERIODIC, 0.3, -10.0, 5.0) == []


def test_scan_detects_double_zero_as_even_touch():
    # Z(s, 1/6) = (2^s-1)(3^s-1) zeta(s) has a double zero at s = 0
    recs = scan_real_zeros(Family.Z, "1/6", -0.9, 0.9)
    assert len(recs) == 1
    assert recs[0].multiplicity_class == EVEN_TOUCH
    assert abs(recs[0].location) < 1e-6


def test_scan_double_zero_at_oracle_shift():
    # at a_1 the extra zero collides with the trivial zero at -2: double there,
    # while -4 stays simple
    recs = scan_real_zeros(Family.Z, A1_DOUBLE_ZERO, -4.9, -1.5, 0.05)
    by_loc = {round(rec.location): rec for rec in recs}
    assert set(by_loc) == {-4, -2}
    assert by_loc[-2].multiplicity_class == EVEN_TOUCH
    assert by_loc[-4].multiplicity_class == SIMPLE


def test_scan_splits_around_pole():
    with pytest.warns(UserWarning, match="pole"):
        recs = scan_real_zeros(Family.Z, 0.3, 0.5, 1.5, 0.05)
    assert recs == []


def test_scan_rejects_bad_interval():
    with pytest.raises(DomainError):
        scan_real_zeros(Family.Y, 0.3, 2.0, -2.0)


def test_beta_exact_boundary_value():
    pt = beta_zero(Family.P, Alpha.parse("1/6"))
    assert pt.beta == 1.0
    pt_z = beta_zero(Family.Z, Alpha.parse("1/6"))
    assert pt_z.beta == 0.0


def test_beta_against_oracle():
    for a, want in BETA_Z_ORACLE.items():
        pt = beta_zero(Family.Z, a)
        assert pt.beta == pytest.approx(want, abs=2e-10)
    pt = beta_zero(Family.P, 0.2499)
    assert pt.beta == pytest.approx(BETA_P_2499_ORACLE, abs=2e-9)


def test_beta_matches_independent_function_zero():
    # beta is derived from the P bisection; confirm Z itself vanishes there
    for a in (0.05, 0.1, 0.15):
        pt = beta_zero(Family.Z, a)
        assert 0.0 < pt.beta < 1.0
        assert abs(eval_family(Family.Z, complex(pt.beta, 0.0), a).real) < 1e-8


def test_beta_ranges_and_sum():
    for a in (0.04, 0.1, 0.16):
        bp = beta_zero(Family.P, a).beta
        bz = beta_zero(Family.Z, a).beta
        assert 0.0 < bp < 1.0 and 0.0 < bz < 1.0
        assert bp + bz == pytest.approx(1.0, abs=1e-12)
    for a in (0.17, 0.2, 0.24):
        assert beta_zero(Family.P, a).beta > 1.0


def test_beta_monotone_on_grids():
    a_small = np.linspace(0.004, 0.16, 50)
    bz = [beta_zero(Family.Z, float(a)).beta for a in a_small]
    bp = [beta_zero(Family.P, float(a)).beta for a in a_small]
    assert all(x > y for x, y in zip(bz, bz[1:]))  # strictly decreasing
    assert all(x < y for x, y in zip(bp, bp[1:]))  # strictly increasing
    a_mid = np.linspace(0.17, 0.2499, 30)
    bp_mid = [beta_zero(Family.P, float(a)).beta for a in a_mid]
    assert all(x < y for x, y in zip(bp_mid, bp_mid[1:]))


def test_beta_domain():
    with pytest.raises(DomainError):
        beta_zero(Family.P, 0.3)
    with pytest.raises(DomainError):
        beta_zero(Family.Y, 0.1)


def test_z_vanishes_at_one_minus_beta_p_between_sixth_and_quarter():
    # for 1/6 < a < 1/4, Z vanishes at 0 and at the extra zero 1 - beta_P(a);
    # the latter sits inside (-0.99, 0.99) for a close to 1/6 (beta_P < 1.99)
    # and leaves through -0.99 as a grows
    for a in (0.18, 0.2, 0.23):
        beta_p = beta_zero(Family.P, a).beta
        assert beta_p > 1.0
        assert abs(eval_family(Family.Z, complex(1.0 - beta_p, 0.0), a)) < 1e-8
        recs = scan_real_zeros(Family.Z, a, -0.99, 0.99, 0.02)
        expected = [0.0]
        if 1.0 - beta_p > -0.99:
            expected = [1.0 - beta_p, 0.0]
        assert len(recs) == len(expected)
        for rec, want in zip(recs, expected):
            assert abs(rec.location - want) < 1e-8


def test_asymptotic_prediction_values():
    # small-a main terms (a^2 log a coefficient 4; see module docstring)
    a = 0.01
    assert asymptotic_prediction(Family.P, a) == pytest.approx(
        2 * a - 4 * a * a * math.log(a), rel=1e-14
    )
    assert asymptotic_prediction(Family.Z, a) == pytest.approx(
        1 - 2 * a + 4 * a * a * math.log(a), rel=1e-14
    )
    # prediction tends to 1 for Z as a -> 0
    assert asymptotic_prediction(Family.Z, 1e-9) == pytest.approx(1.0, abs=1e-7)
    # near 1/4 the log-cosine form applies
    assert asymptotic_prediction(Family.P, 0.2499) == pytest.approx(
        -math.log(math.cos(2 * math.pi * 0.2499)) / math.log(2.0), rel=1e-13
    )
    assert asymptotic_prediction(Family.Z, 0.2499) < 0.0


def test_asymptotic_accuracy_small_a():
    # |beta - main terms| = O(a^2) with a modest constant once the a^2 log a
    # coefficient is right
    for a in (0.005, 0.01, 0.02):
        pt = beta_zero(Family.Z, a)
        assert pt.deviation < 2.0 * a * a


def test_interval_criterion_known_cases():
    assert interval_zero_criterion(Alpha.parse("1/4"), -1) is True
    assert interval_zero_criterion(Alpha.parse("1/2"), -1) is False
    assert interval_zero_criterion(0.3, -2) is False
    # and the scanner agrees over (1, 2): zeta(sigma, 0.3) > 0 there
    assert scan_real_zeros(Family.HURWITZ, 0.3, 1.001, 1.999, 0.02) == []


def test_interval_criterion_agrees_with_scanner():
    # the substantive exercise: intervals (-n-1, -n) on the nonpositive axis
    eps = 1e-6
    for a10 in range(1, 10):  # a = 0.1 .. 0.9 exact tenths
        alpha = Alpha.parse(f"{a10}/10")
        for n in range(-1, 7):
            lo, hi = -n - 1.0, -float(n)
            found = scan_real_zeros(Family.HURWITZ, alpha, lo + eps, hi - eps, 0.02)
            criterion = interval_zero_criterion(alpha, n)
            assert criterion == (len(found) > 0), (alpha, n, found)


def test_rectangle_count_eleven():
    # Z(s, 1/6) = (2^s-1)(3^s-1) zeta(s) on [-1,2] x [1,30]: three critical
    # zeros (t ~ 14.13, 21.02, 25.01), three roots of 2^s = 1 (t = 2 pi k/log 2)
    # and five roots of 3^s = 1 (t = 2 pi k/log 3)
    rc = count_zeros_rectangle(Family.Z, Alpha.parse("1/6"), (complex(-1, 1), complex(2, 30)), 512)
    assert rc.count == 11
    assert rc.boundary_min_abs > 1e-6
    assert rc.winding_error < 1e-3


def test_rectangle_count_zero_free_region():
    rc = count_zeros_rectangle(Family.Z, 0.3, (complex(2, 1), complex(3, 10)), 256)
    assert rc.count == 0


def test_rectangle_counts_add_under_splitting():
    whole = count_zeros_rectangle(Family.Z, Alpha.parse("1/6"), (complex(-1, 1), complex(2, 30)), 512)
    lowhalf = count_zeros_rectangle(Family.Z, Alpha.parse("1/6"), (complex(-1, 1), complex(2, 16)), 512)
    highhalf = count_zeros_rectangle(Family.Z, Alpha.parse("1/6"), (complex(-1, 16), complex(2, 30)), 512)
    assert lowhalf.count + highhalf.count == whole.count


def test_rectangle_count_stable_under_more_samples():
    a = Alpha.parse("1/6")
    rc1 = count_zeros_rectangle(Family.Z, a, (complex(-1, 1), complex(2, 30)), 512)
    rc2 = count_zeros_rectangle(Family.Z, a, (complex(-1, 1), complex(2, 30)), 1024)
    assert rc1.count == rc2.count


def test_rectangle_near_pole_rejected():
    with pytest.raises(DomainError):
        count_zeros_rectangle(Family.Z, 0.3, (complex(0.5, -0.5), complex(1.5, 0.5)), 128)


def test_rectangle_boundary_through_zero_rejected():
    # boundary passing essentially through the double zero of Z(s, 1/6) at 0
    with pytest.raises((BoundaryError, DomainError)):
        count_zeros_rectangle(Family.Z, Alpha.parse("1/6"), (complex(0, -1), complex(1.5, 1)), 128)
