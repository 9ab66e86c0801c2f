"""Labellings of wheels, optionally with faces, for a range of sizes."""

import argparse

from maglab import AnnealParams, TargetKind, anneal, verify
from maglab.generators import wheel
from maglab.graph import Cls
from maglab.labelling import DomainSelector, Kind


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5, 6, 7, 8])
    ap.add_argument("--target", default="edges")
    ap.add_argument("--kind", default="magic", choices=["magic", "antimagic"])
    ap.add_argument("--faces", action="store_true", help="label faces as well")
    ap.add_argument("--super", dest="super_", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-iters", type=int, default=1_000_000)
    args = ap.parse_args()

    sel = DomainSelector(True, True, args.faces)
    tk = TargetKind(Cls.parse(args.target), Kind(args.kind), super_=args.super_)
    for n in args.sizes:
        g = wheel(n, faces=args.faces)
        out = anneal(g, sel, tk, params=AnnealParams(seed=args.seed, max_iters=args.max_iters))
        rep = verify(g, out.labelling, sel, tk)
        print(f"W_{n}: solved={out.solved} iterations={out.iterations} {rep.attestation()}")


if __name__ == "__main__":
    main()
