#!/usr/bin/env python3
"""Where the real zeros are.

The odd-symmetric families Y, O, X vanish on the real line only at the
negative odd integers; Z and P vanish only at the (non-positive/negative)
even integers once a >= 1/4.  Below 1/4 an extra zero appears, and at one
special shift it collides with a trivial zero and doubles up.

Run:  python3 demos/real_zeros.py
"""

from zetazeros import Alpha, Family, interval_zero_criterion, scan_real_zeros

A1_DOUBLE = 0.2308296502521382  # shift where the extra zero of Z lands on -2


def show(fam, a, lo, hi):
    recs = scan_real_zeros(fam, a, lo, hi)
    locs = ", ".join(f"{r.location:+.9f} ({r.multiplicity_class})" for r in recs)
    print(f"  {fam.name:>8}(s, {a}): {locs or 'no zeros'}")


def main():
    print("Scans over [-10, 2] at a = 0.3 (odd family) and [-9, 0.99] (even family)")
    show(Family.Y, 0.3, -10.0, 2.0)
    show(Family.O, 0.3, -10.0, 2.0)
    show(Family.Z, 0.3, -9.0, 0.99)
    show(Family.P, 0.3, -9.0, 0.99)
    print()

    print("The periodic zeta itself never vanishes on the real line (0 < a < 1/2):")
    show(Family.PERIODIC, 0.3, -10.0, 5.0)
    print()

    print("Exact rational a = 1/6: Z = (2^s-1)(3^s-1) zeta(s) has a DOUBLE zero at 0")
    show(Family.Z, Alpha.parse("1/6"), -0.9, 0.9)
    print()

    print(f"At a = {A1_DOUBLE:.12f} the extra zero collides with -2 and doubles:")
    show(Family.Z, A1_DOUBLE, -4.9, -1.5)
    print()

    print("Interval criterion vs scanner for zeta(s, a): zero in (-n-1, -n)?")
    for a_txt in ("1/4", "1/2", "3/10"):
        alpha = Alpha.parse(a_txt)
        verdicts = [f"n={n}: {'yes' if interval_zero_criterion(alpha, n) else 'no '}" for n in range(-1, 5)]
        print(f"  a = {a_txt:>4}:  " + "  ".join(verdicts))
    print("  (n = -1 is the interval (0, 1); the criterion is the Bernoulli sign product)")


if __name__ == "__main__":
    main()
