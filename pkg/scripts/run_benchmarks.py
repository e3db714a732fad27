"""Run every benchmark suite and write one CSV per suite into a directory.

    python3 scripts/run_benchmarks.py --out-dir bench --seeds 3
"""

import argparse
import csv
import os
import sys
from collections import defaultdict

from cfcolor.cli import BENCH_COLUMNS, BENCH_SUITES, bench_rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", default="bench")
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--suite", action="append", choices=sorted(BENCH_SUITES), help="repeatable; default all")
    args = p.parse_args(argv)

    os.makedirs(args.out_dir, exist_ok=True)
    ok = True
    for suite in args.suite or list(BENCH_SUITES):
        path = os.path.join(args.out_dir, f"{suite}.csv")
        summary = defaultdict(list)
        with open(path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
            w.writeheader()
            for row in bench_rows(suite, args.seeds):
                w.writerow(row)
                summary[row["n"]].append(row["colors"])
                ok &= row["verified"]
        ladder = "  ".join(f"n={n}: max {max(c)} colors" for n, c in summary.items())
        print(f"{suite:16s} {ladder}  -> {path}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
