"""Command-line interface: gen, solve, verify, oracle, export-ilp, bench.

Exit codes: 0 solved/accepted, 1 unsolved/rejected, 2 usage error,
3 invalid input, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from typing import Optional, Sequence

from . import bench
from .annealer import RNG_ALGORITHM, AnnealParams, anneal
from .fileio import (BenchWriter, FormatError, LabellingRecord, format_graph, format_labelling,
                     read_graph, read_labelling)
from .generators import GENERATOR_NAMES, from_spec
from .graph import Cls, Graph, GraphError
from .ilp import IlpError, build_ilp, feasible_k_range, write_model
from .labelling import (DomainSelector, Kind, LabellingError, TargetKind, verify, weight_sum_bounds)
from .oracle import Mode, OracleQuery, Status, oracle_search

EXIT_OK = 0
EXIT_UNSOLVED = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4


class UsageError(Exception):
    pass


def _graph_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph", metavar="PATH", help="graph file")
    src.add_argument("--gen", nargs="+", metavar="SPEC",
                     help=f"generator name and integer args ({', '.join(GENERATOR_NAMES)})")
    p.add_argument("--faces", action="store_true", help="attach faces (cycle, wheel generators)")


def _task_args(p: argparse.ArgumentParser, default_kind: Optional[str] = None) -> None:
    p.add_argument("--v", action="store_true", help="label vertices")
    p.add_argument("--e", action="store_true", help="label edges")
    p.add_argument("--f", action="store_true", help="label faces")
    p.add_argument("--super", dest="super_", action="store_true", help="vertex labels must be 1..|V|")
    p.add_argument("--target", required=True, help="weights to constrain: vertices, edges or faces")
    p.add_argument("--kind", required=default_kind is None, default=default_kind, choices=[k.value for k in Kind])
    p.add_argument("--a", type=int)
    p.add_argument("--d", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maglab", allow_abbrev=False,
                                     description="Search for magic and antimagic graph labellings.")
    parser.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", allow_abbrev=False, help="write a generated graph file")
    p.add_argument("name", choices=GENERATOR_NAMES)
    p.add_argument("args", nargs="*", type=int)
    p.add_argument("--faces", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("solve", allow_abbrev=False, help="run the annealer")
    _graph_args(p)
    _task_args(p)
    p.add_argument("--detect-ad", action="store_true",
                   help="for --kind ad without --a/--d: sweep d and the a values the weight sum allows")
    p.add_argument("--d-max", type=int, default=3, help="largest d tried by --detect-ad")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=1_000_000)
    p.add_argument("--runs", type=int, default=1, help="independent restarts, seeds seed..seed+runs-1")
    p.add_argument("--debug", action="store_true", help="cross-check incremental values every step")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", allow_abbrev=False, help="check a labelling file")
    p.add_argument("labelling")
    _graph_args(p)

    p = sub.add_parser("oracle", allow_abbrev=False, help="exhaustive search on a small instance")
    _graph_args(p)
    _task_args(p)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="count")
    p.add_argument("--limit", type=int)
    p.add_argument("--budget", type=int, default=50_000_000)
    p.add_argument("--k", type=int, help="restrict a magic search to this constant")
    p.add_argument("--no-prune", action="store_true", help="plain enumeration of all bijections")
    p.add_argument("-o", "--output", help="write the first labelling found")

    p = sub.add_parser("export-ilp", allow_abbrev=False, help="write the integer program in LP format")
    _graph_args(p)
    _task_args(p, default_kind="magic")
    p.add_argument("--K", required=True, help="magic constant, or 'sweep' for every feasible one")
    p.add_argument("-o", "--output", help="file (or directory with --K sweep)")

    p = sub.add_parser("bench", allow_abbrev=False, help="iteration-count benchmark, CSV output")
    p.add_argument("family", choices=sorted(bench.FAMILIES))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--values", nargs="+", type=int, help="points (K_n: n, P3^k: k)")
    g.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--runs", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=2_000_000)
    p.add_argument("--force", action="store_true", help="allow points beyond the desk-scale range")
    p.add_argument("--no-wall-time", action="store_true", help="leave wall_time empty (byte-stable CSV)")
    p.add_argument("--fit", action="store_true", help="print exponential and linear trend fits")
    p.add_argument("-o", "--output")
    return parser


def load_graph(args: argparse.Namespace) -> Graph:
    if args.graph:
        return read_graph(args.graph)
    name, *rest = args.gen
    try:
        ints = [int(x) for x in rest]
    except ValueError:
        raise UsageError(f"generator arguments must be integers: {rest}") from None
    return from_spec(name, ints, faces=args.faces)


def task_from_args(args: argparse.Namespace, allow_missing_ad: bool = False) -> tuple[DomainSelector, TargetKind]:
    if not (args.v or args.e or args.f):
        raise UsageError("select at least one of --v, --e, --f")
    if args.super_ and not args.v:
        raise UsageError("--super requires --v")
    sel = DomainSelector(args.v, args.e, args.f)
    try:
        target = Cls.parse(args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    kind = Kind(args.kind)
    if kind is Kind.AD:
        if args.a is None or args.d is None:
            if allow_missing_ad:
                return sel, TargetKind(target, Kind.ANTIMAGIC, super_=args.super_)
            raise UsageError("--kind ad needs --a and --d (or --detect-ad)")
        if args.a < 1 or args.d < 0:
            raise UsageError("--a must be >= 1 and --d >= 0")
        return sel, TargetKind(target, kind, args.a, args.d, args.super_)
    return sel, TargetKind(target, kind, super_=args.super_)


def _emit(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(args: argparse.Namespace, msg: str) -> None:
    if not args.quiet:
        print(msg, file=sys.stderr if getattr(args, "output", None) in (None, "-") else sys.stdout)


def cmd_gen(args: argparse.Namespace) -> int:
    g = from_spec(args.name, args.args, faces=args.faces)
    _emit(format_graph(g), args.output)
    return EXIT_OK


def ad_candidates(g: Graph, sel: DomainSelector, tk: TargetKind, d_max: int) -> list[tuple[int, int]]:
    """(a, d) pairs not excluded by the total-weight bounds, d = 0..d_max."""
    m = g.count(tk.target)
    lo, hi = weight_sum_bounds(g, sel, tk.target, tk.super_)
    tri = m * (m - 1) // 2
    out = []
    for d in range(d_max + 1):
        a_lo = max(1, -((-(lo - d * tri)) // m))
        a_hi = (hi - d * tri) // m
        out.extend((a, d) for a in range(a_lo, a_hi + 1))
    return out


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args)
    sel, tk = task_from_args(args, allow_missing_ad=args.detect_ad)
    tk.check(g, sel)
    params = AnnealParams(p=args.p, q=args.q, max_iters=args.max_iters, seed=args.seed, debug=args.debug)
    try:
        params.resolved(sel.size(g))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")

    if Kind(args.kind) is Kind.AD and tk.kind is not Kind.AD:
        tasks = [TargetKind(tk.target, Kind.AD, a, d, tk.super_) for a, d in ad_candidates(g, sel, tk, args.d_max)]
        if not tasks:
            _say(args, "no (a, d) pair is compatible with the weight-sum bounds")
            return EXIT_UNSOLVED
    else:
        tasks = [tk]

    best = None
    best_tk = tasks[0]
    for task in tasks:
        for i in range(args.runs):
            out = anneal(g, sel, task, params=replace(params, seed=args.seed + i))
            if best is None or out.value < best.value:
                best, best_tk = out, task
            if out.solved:
                break
        if best.solved:
            break

    report = verify(g, best.labelling, sel, best_tk)
    rec = LabellingRecord(best.labelling, best_tk, best.solved, report.attestation(), {
        "rng": RNG_ALGORITHM, "seed": str(best.seed), "iterations": str(best.iterations),
        "objective": str(best.value), "p": str(best.p), "q": repr(best.q)})
    _emit(format_labelling(g, rec), args.output)
    status = "solved" if best.solved else "UNSOLVED"
    _say(args, f"{status} after {best.iterations} iterations (seed {best.seed}, objective {best.value})")
    _say(args, report.summary())
    return EXIT_OK if best.solved else EXIT_UNSOLVED


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args)
    rec = read_labelling(args.labelling, g)
    report = verify(g, rec.labelling, rec.labelling.selector, rec.target)
    print(report.summary())
    if rec.attestation is not None and rec.attestation != report.attestation():
        print(f"attestation mismatch: file says '{rec.attestation}', recomputed '{report.attestation()}'")
        return EXIT_UNSOLVED
    return EXIT_OK if report.accepted else EXIT_UNSOLVED


def _key_text(key) -> str:
    if key is None:
        return "no progression"
    if isinstance(key, tuple):
        return f"a={key[0]} d={key[1]}"
    return f"k={key}"


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args)
    sel, tk = task_from_args(args)
    q = OracleQuery(g, sel, tk, Mode(args.mode), args.limit, args.budget, args.k)
    res = oracle_search(q, prune=not args.no_prune)
    print(f"status: {res.status.value}")
    print(f"labellings: {res.count}")
    print(f"nodes: {res.nodes}")
    if res.census:
        print("census:")
        for key, cnt in res.census.items():
            print(f"  {_key_text(key):>20}  {cnt}")
    if args.output and res.labellings:
        lab = res.labellings[0]
        report = verify(g, lab, sel, tk)
        _emit(format_labelling(g, LabellingRecord(lab, tk, report.accepted, report.attestation())), args.output)
    if res.status is Status.BUDGET_EXCEEDED:
        return EXIT_BUDGET
    return EXIT_OK if res.status is Status.FOUND else EXIT_UNSOLVED


def cmd_export_ilp(args: argparse.Namespace) -> int:
    g = load_graph(args)
    sel, tk = task_from_args(args)
    if args.K == "sweep":
        if not args.output:
            raise UsageError("--K sweep needs -o DIRECTORY")
        os.makedirs(args.output, exist_ok=True)
        for K in feasible_k_range(g, sel, tk):
            with open(os.path.join(args.output, f"model_K{K}.lp"), "w") as fh:
                write_model(build_ilp(g, sel, tk, K), fh)
        return EXIT_OK
    try:
        K = int(args.K)
    except ValueError:
        raise UsageError("--K must be an integer or 'sweep'") from None
    _emit(write_model(build_ilp(g, sel, tk, K)), args.output)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    fam = bench.FAMILIES[args.family]
    if args.values:
        points = args.values
    elif args.range:
        points = list(range(args.range[0], args.range[1] + 1))
    else:
        points = list(fam.default_points)
    if fam.name == "p2p3-antimagic" and (args.values or args.range):
        raise UsageError("p2p3-antimagic always runs its fixed (r, s) list")
    params = AnnealParams(max_iters=args.max_iters, seed=args.seed)
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    try:
        records = []
        fh = open(args.output, "w", newline="") if args.output and args.output != "-" else sys.stdout
        try:
            writer = BenchWriter(fh)
            for rec in bench.run_family(fam, points, args.runs, params, args.force, not args.no_wall_time):
                writer.write(rec)
                records.append(rec)
        finally:
            if fh is not sys.stdout:
                fh.close()
    except bench.GuardrailError as exc:
        raise UsageError(str(exc)) from None
    stats = bench.summarize(fam, records, points)
    for st in stats:
        _say(args, f"{fam.name} {st.param}: size={st.size} solved {st.solved}/{st.runs} "
                   f"mean iterations {st.mean_iterations:.1f}")
    if args.fit and len(stats) >= 2:
        fits = bench.fit_trends([s.size for s in stats], [s.mean_iterations for s in stats])
        _say(args, fits.describe())
    return EXIT_OK if all(s.solved == s.runs for s in stats) else EXIT_UNSOLVED


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "export-ilp": cmd_export_ilp,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, LabellingError, FormatError, IlpError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
