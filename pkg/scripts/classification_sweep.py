"""Histogram of diffeomorphism types over a (k, l) sweep, for each epsilon.

Shows that X_{k,2} only reaches X0/X4/X8 and Xbar_{k,4} only X2/X6.

    python scripts/classification_sweep.py --k-max 201 --l 2 4 6
"""
import argparse
from collections import Counter
from math import gcd

from s2s3inv.classification import classify
from s2s3inv.invariants import FamilyDescriptor


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=201)
    ap.add_argument("--l", type=int, nargs="+", default=[2, 4])
    args = ap.parse_args()

    for family in ("caseI", "caseII"):
        for l in args.l:
            for eps in (1, -1):
                hist = Counter()
                for k in range(-args.k_max, args.k_max + 1):
                    if k % 2 and gcd(k, l) == 1:
                        hist[str(classify(FamilyDescriptor(family, k=k, l=l), eps))] += 1
                row = "  ".join(f"{t}:{n}" for t, n in sorted(hist.items()))
                print(f"{family:<7} l={l:<3} eps={eps:+d}  {row}")


if __name__ == "__main__":
    main()
