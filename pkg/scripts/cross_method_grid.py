#!/usr/bin/env python3
"""Cross-method agreement sweep.

Runs every extraction route over a grid of parameter sets and reports, per
system, whether all routes produced identical rationals and how long each
route took.  Exits nonzero on any disagreement.

Usage: python3 scripts/cross_method_grid.py [--count 30]
"""

import argparse
import sys
import time
import warnings
from fractions import Fraction as F

from mopfact import JacobiPineiro, LaguerreFirstKind, MomentMatrixSet, euler_gauss
from mopfact.closedforms import closed_form_alphas
from mopfact.gaussborel import lu_alpha_forms, minor_alpha_forms

GRID = [
    JacobiPineiro(a=(F(0),), b=F(0)),
    JacobiPineiro(a=(F(1, 2),), b=F(1, 3)),
    JacobiPineiro(a=(F(1, 3), F(1, 2)), b=F(1, 4)),
    JacobiPineiro(a=(F(-1, 3), F(1, 5)), b=F(1)),
    JacobiPineiro(a=(F(1, 5), F(1, 3), F(1, 2)), b=F(1, 7)),
    LaguerreFirstKind(a=(F(0),)),
    LaguerreFirstKind(a=(F(1, 2), F(1, 3))),
    LaguerreFirstKind(a=(F(1, 5), F(2, 7), F(3, 11))),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--count", type=int, default=30)
    args = parser.parse_args()
    warnings.filterwarnings("ignore")

    failures = 0
    for spec in GRID:
        label = f"{type(spec).__name__} r={spec.r} a={[str(x) for x in spec.a]}"
        t0 = time.time()
        mset = MomentMatrixSet.for_count(spec, args.count)
        b_ratio, a_diff = lu_alpha_forms(mset, args.count)
        t_lu = time.time() - t0

        t0 = time.time()
        m_ratio, m_diff = minor_alpha_forms(mset, args.count)
        t_min = time.time() - t0

        t0 = time.time()
        ladder = list(euler_gauss(spec, args.count).values)
        t_eg = time.time() - t0

        closed = list(closed_form_alphas(spec, args.count).values)

        agree = b_ratio == a_diff == m_ratio == m_diff == ladder == closed
        failures += 0 if agree else 1
        verdict = "identical" if agree else "DISAGREE"
        print(
            f"{label:60s} {verdict:9s}  lu {t_lu:5.2f}s  minors {t_min:5.2f}s  "
            f"ladder {t_eg:5.2f}s"
        )
        print(f"  alpha_0..alpha_4: {[str(v) for v in b_ratio[:5]]}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
