#!/usr/bin/env python3
"""A quick tour: the two base functions, the five composed families, their
exact special values, and the functional equations that tie s to 1-s.

Run:  python3 demos/tour_of_the_families.py
"""

from zetazeros import Alpha, Family, eval_family, functional_equation_pair, hurwitz_zeta, periodic_zeta, special_values


def main():
    a = 0.3
    print(f"Base functions at a = {a}")
    print(f"  zeta(2, a)      = {hurwitz_zeta(2.0, a):.12f}")
    print(f"  zeta(-2.5, a)   = {hurwitz_zeta(-2.5, a):.12f}")
    print(f"  Li_2(e^2pi i a) = {periodic_zeta(2.0, a):.12f}")
    print()

    print("The five composed families at s = 2.5 + 1.5i, a = 0.3")
    s = complex(2.5, 1.5)
    for fam in (Family.Z, Family.P, Family.Y, Family.O, Family.X):
        print(f"  {fam.name}(s, a) = {eval_family(fam, s, a):.10f}")
    print()

    print("Exact special values (closed forms, not kernel limits)")
    for a_txt in ("0.2", "1/6", "1/4"):
        sv = special_values(Alpha.parse(a_txt))
        print(f"  a = {a_txt:>4}:  Z(0,a) = {sv.z_at_0:.1f}   P(0,a) = {sv.p_at_0:.1f}   "
              f"P(1,a) = {sv.p_at_1.real:+.10f}   Li_0 = {sv.li_at_0:.6f}")
    print("  (P(1, 1/6) = 0 exactly: 2 sin(pi/6) = 1)")
    print()

    print("Functional equations: family(1-s) = 2 Gamma(s) (2pi)^-s trig(pi s/2) partner(s)")
    s = complex(2.3, 0.7)
    for fam, partner, trig in (("Z", "P", "cos"), ("P", "Z", "cos"), ("Y", "O", "sin"),
                               ("O", "Y", "sin"), ("X", "X", "sin")):
        lhs, rhs = functional_equation_pair(Family[fam], s, 0.3)
        rel = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)
        print(f"  {fam}(1-s) vs {trig}-{partner}(s): both sides {lhs:.10f}, relative gap {rel:.2e}")


if __name__ == "__main__":
    main()
