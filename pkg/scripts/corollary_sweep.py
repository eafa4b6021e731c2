"""Sweep the printed rank formula against the derived ranks.

    python3 scripts/corollary_sweep.py --k-max 6 --r-max 6 --max-degree 60
"""
import argparse

from primcob.ranks import corollary_compare


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--r-max", type=int, default=6)
    ap.add_argument("--max-degree", type=int, default=60)
    args = ap.parse_args()
    print(f"{'k':>2} {'r':>2}  result")
    for k in range(1, args.k_max + 1):
        for r in range(args.r_max + 1):
            report = corollary_compare(k, r, args.max_degree)
            print(f"{k:>2} {r:>2}  {report.summary()}")


if __name__ == "__main__":
    main()
