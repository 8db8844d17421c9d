#!/usr/bin/env python3
"""Tables of the coefficient asymptotics for the two built-in families.

For the beta weights the coefficients approach r^r/(r+1)^(r+1); for the
exponential weights alpha_n grows like n/(r(r+1)).  Also prints the
large-parameter bridge between the two families: b * alpha_n(b) at b = 10^3
and 10^6 against the exponential-family value.

Usage: python3 scripts/asymptotics_table.py [--nmax 60]
"""

import argparse
from fractions import Fraction as F

from mopfact import JacobiPineiro, LaguerreFirstKind
from mopfact.closedforms import asymptotic_rows, jp_alpha_bcf, jp_limit, laguerre_alpha


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--nmax", type=int, default=60)
    args = parser.parse_args()

    jp_specs = [
        JacobiPineiro(a=(F(0),), b=F(0)),
        JacobiPineiro(a=(F(1, 3), F(1, 2)), b=F(1, 4)),
    ]
    for spec in jp_specs:
        limit = jp_limit(spec.r)
        print(f"beta-weight family, r={spec.r}: limit {limit} = {float(limit):.6f}")
        rows = asymptotic_rows(spec, args.nmax)
        for n, value, gap, gap_dec in rows:
            if n % 10 == 0:
                print(f"  n={n:4d}  alpha={float(value):.9f}  |gap|={gap_dec}")
        print()

    lag_specs = [LaguerreFirstKind(a=(F(0),)), LaguerreFirstKind(a=(F(1, 2), F(1, 3)))]
    for spec in lag_specs:
        print(f"exponential family, r={spec.r}: alpha_n * r(r+1)/n -> 1")
        rows = asymptotic_rows(spec, args.nmax)
        for n, value, scaled, scaled_dec in rows:
            if n % 10 == 0:
                print(f"  n={n:4d}  alpha={float(value):10.4f}  scaled={scaled_dec}")
        print()

    print("large-b bridge: b * alpha_n(b) versus the exponential-family value")
    for a in ((F(0),), (F(1, 2), F(1, 3))):
        lag = LaguerreFirstKind(a=a)
        for b in (F(10**3), F(10**6)):
            jp = JacobiPineiro(a=a, b=b)
            worst = max(
                abs(b * jp_alpha_bcf(jp, n) / laguerre_alpha(lag, n) - 1)
                for n in range(13)
            )
            print(f"  r={lag.r}  b=10^{len(str(b.numerator)) - 1}: worst relative gap {float(worst):.3e}")


if __name__ == "__main__":
    main()
