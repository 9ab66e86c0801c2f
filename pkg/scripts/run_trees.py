"""Super edge-magic total labellings of random labelled trees."""

import argparse
from statistics import mean

from maglab import AnnealParams, TargetKind, anneal
from maglab.generators import random_labelled_tree
from maglab.graph import Cls
from maglab.labelling import TOTAL, Kind


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--trees", type=int, default=25, help="trees per size")
    ap.add_argument("--max-iters", type=int, default=1_000_000)
    args = ap.parse_args()

    tk = TargetKind(Cls.EDGE, Kind.MAGIC, super_=True)
    for n in range(args.min_n, args.max_n + 1):
        its, solved = [], 0
        for i in range(args.trees):
            g = random_labelled_tree(n, 1000 * n + i)
            out = anneal(g, TOTAL, tk, params=AnnealParams(seed=i, max_iters=args.max_iters))
            solved += out.solved
            its.append(out.iterations)
        print(f"n={n}: solved {solved}/{args.trees}, mean iterations {mean(its):.0f}, max {max(its)}")


if __name__ == "__main__":
    main()
