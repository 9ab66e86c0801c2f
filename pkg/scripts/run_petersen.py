"""Super edge-magic total labelling of the Petersen graph, one line per seed."""

import argparse

from maglab import AnnealParams, TargetKind, anneal, verify
from maglab.generators import generalized_petersen
from maglab.graph import Cls
from maglab.labelling import TOTAL, Kind


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seeds", type=int, default=16)
    ap.add_argument("--max-iters", type=int, default=1_000_000)
    args = ap.parse_args()

    g = generalized_petersen(args.n, args.k)
    tk = TargetKind(Cls.EDGE, Kind.MAGIC, super_=True)
    for seed in range(args.seeds):
        out = anneal(g, TOTAL, tk, params=AnnealParams(seed=seed, max_iters=args.max_iters))
        k = verify(g, out.labelling, TOTAL, tk).magic_constant
        print(f"seed {seed:2d}: solved={out.solved} iterations={out.iterations} k={k} ({out.wall_time:.2f}s)")
        if out.solved:
            print("  vertex labels:", out.labelling.by_class(g, Cls.VERTEX))
            print("  edge labels:  ", out.labelling.by_class(g, Cls.EDGE))


if __name__ == "__main__":
    main()
