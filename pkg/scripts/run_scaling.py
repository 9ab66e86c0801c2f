"""Iteration-count scaling for a benchmark family, with trend fits.

Writes the per-run CSV and prints the mean per point plus exponential,
linear and power-law fits of mean iterations against size.
"""

import argparse
import sys

from maglab.annealer import AnnealParams
from maglab.bench import FAMILIES, fit_trends, run_family, summarize
from maglab.fileio import BenchWriter


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("family", choices=sorted(FAMILIES))
    ap.add_argument("--values", type=int, nargs="+")
    ap.add_argument("--runs", type=int, default=32)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-iters", type=int, default=2_000_000)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()

    fam = FAMILIES[args.family]
    points = args.values or list(fam.default_points)
    fh = sys.stdout if args.output == "-" else open(args.output, "w", newline="")
    writer = BenchWriter(fh)
    records = []
    for rec in run_family(fam, points, args.runs, AnnealParams(seed=args.seed, max_iters=args.max_iters)):
        writer.write(rec)
        records.append(rec)
    if fh is not sys.stdout:
        fh.close()

    stats = summarize(fam, records, points)
    for s in stats:
        print(f"{s.param:>6}  size {s.size:4d}  solved {s.solved}/{s.runs}  mean {s.mean_iterations:.1f}",
              file=sys.stderr)
    if len(stats) >= 2:
        print(fit_trends([s.size for s in stats], [s.mean_iterations for s in stats]).describe(), file=sys.stderr)


if __name__ == "__main__":
    main()
