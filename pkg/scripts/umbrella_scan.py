"""Run the exact Whitney umbrella verification and dump the report as JSON."""
import argparse
import json
import time

from primcob import umbrella


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=int, default=umbrella.DEFAULT_HEIGHT)
    ap.add_argument("--pairs", type=int, default=10_000)
    ap.add_argument("--sphere-points", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="write the JSON report here instead of stdout")
    args = ap.parse_args()

    start = time.perf_counter()
    report = umbrella.verify(args.height, args.pairs, args.sphere_points, args.seed)
    elapsed = time.perf_counter() - start
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    status = "PASS" if report.passed else "FAIL"
    print(f"{status}: {report.grid_points} grid points in {elapsed:.1f}s", flush=True)


if __name__ == "__main__":
    main()
