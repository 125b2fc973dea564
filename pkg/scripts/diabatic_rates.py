#!/usr/bin/env python3
"""Observe the collapse of the minus family numerically: for a grid of
modes, print |lambda_minus/eps + k| on a geometric eps-grid together with
the fitted decay order."""

import argparse
import math
import sys
from fractions import Fraction

from crseifert.spectrum import lambda_pm


def fitted_order(residuals, tail: int = 4) -> float:
    """Mean log2-slope over the last `tail` steps (the asymptotic regime)."""
    logs = [math.log2(r) for r in residuals if r > 0]
    diffs = [a - b for a, b in zip(logs, logs[1:])][-tail:]
    return sum(diffs) / len(diffs)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jmax", type=int, default=10)
    args = parser.parse_args()

    grid = [(Fraction(k), n) for k in (1, 3, 5, 9) for n in (0, 1, 3)]
    print("k  n   residuals on eps = 2^-1 .. 2^-jmax -> fitted order")
    for k, n in grid:
        residuals = []
        for j in range(1, args.jmax + 1):
            eps = Fraction(1, 2**j)
            _, lm = lambda_pm(k, n, eps)
            residuals.append(abs(float(lm) / float(eps) + float(k)))
        if all(r == 0 for r in residuals):
            print(f"{k}  {n}   exact collapse (k = |n| line)")
            continue
        head = "  ".join(f"{r:.2e}" for r in residuals[:4])
        print(f"{k}  {n}   {head} ...  order {fitted_order(residuals):.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
