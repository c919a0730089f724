#!/usr/bin/env python3
"""The extra real zero below a = 1/4 and its asymptotics.

For 0 < a < 1/6 both Z and P pick up one extra real zero in (0, 1), with
beta_Z + beta_P = 1; as a crosses 1/6 the P zero escapes through sigma = 1
and runs off to +infinity as a -> 1/4 like -log(cos 2 pi a)/log 2.

Run:  python3 demos/beta_curves.py [--csv out.csv]
"""

import argparse
import csv
import math
import sys

import numpy as np

from zetazeros import Alpha, Family, beta_zero


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--csv", default=None, help="optionally write the sweep as CSV")
    args = parser.parse_args()

    rows = []
    print(f"{'a':>8} {'beta_P':>14} {'beta_Z':>14} {'prediction':>12} {'deviation':>10}")
    for a in np.concatenate([np.linspace(0.005, 0.16, 12), np.linspace(0.17, 0.2499, 8)]):
        pt = beta_zero(Family.P, float(a))
        bz = 1.0 - pt.beta
        print(f"{a:8.4f} {pt.beta:14.9f} {bz:14.9f} {pt.asymptotic_prediction:12.6f} {pt.deviation:10.2e}")
        rows.append((float(a), pt.beta, bz, pt.asymptotic_prediction, pt.deviation))

    print()
    print("Boundary case a = 1/6 (exact): beta_P = 1, beta_Z = 0")
    pt = beta_zero(Family.P, Alpha.parse("1/6"))
    print(f"  beta_P(1/6) = {pt.beta}")

    print()
    print("Near a = 1/4 the blow-up follows -log(cos 2 pi a)/log 2:")
    for a in (0.24, 0.2475, 0.2499):
        pt = beta_zero(Family.P, a)
        pred = -math.log(math.cos(2 * math.pi * a)) / math.log(2.0)
        print(f"  a = {a}: beta_P = {pt.beta:12.7f}   prediction {pred:12.7f}   gap {abs(pt.beta - pred):.2e}")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["a", "beta_P", "beta_Z", "prediction", "deviation"])
            w.writerows(rows)
        print(f"\nwrote {args.csv}", file=sys.stderr)


if __name__ == "__main__":
    main()
