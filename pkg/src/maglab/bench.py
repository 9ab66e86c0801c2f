"""Iteration-count benchmarks over graph families, with trend fits."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from statistics import mean
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .annealer import AnnealParams, anneal
from .generators import complete_graph, p2p3_product, path, power
from .graph import Cls, Graph
from .labelling import EDGE_ONLY, DomainSelector, Kind, TargetKind
from .fileio import BenchRecord


@dataclass(frozen=True)
class Family:
    name: str
    build: Callable[..., Graph]
    selector: DomainSelector
    target: TargetKind
    default_points: tuple
    guard: Callable[[object], bool]
    describe: str

    def size(self, point) -> int:
        """Abscissa for the fits: n for K_n, edge count for products."""
        if self.name == "kn-super-vmt":
            return point
        return self.graph(point).n_edges

    def graph(self, point) -> Graph:
        return self.build(*point) if isinstance(point, tuple) else self.build(point)


def p2p3_points(limit: int = 50) -> list[tuple[int, int]]:
    """All (r, s) with r, s >= 1 and 2^r 3^s < limit."""
    pts = []
    for s in range(1, 10):
        for r in range(1, 10):
            if 2 ** r * 3 ** s < limit:
                pts.append((r, s))
    return sorted(pts, key=lambda rs: (2 ** rs[0] * 3 ** rs[1], rs))


# K_n: edge labels 1..|E| with equal vertex sums (Stewart's supermagic
# labelling); the constant (n-1)(|E|+1)/2 is integral iff n != 0 mod 4.
FAMILIES: dict[str, Family] = {
    "kn-super-vmt": Family(
        "kn-super-vmt", complete_graph, EDGE_ONLY, TargetKind(Cls.VERTEX, Kind.MAGIC),
        (6, 7, 9, 10), lambda n: 6 <= n <= 12,
        "K_n, vertex-magic edge labelling with consecutive labels 1..|E|"),
    "p3power-antimagic": Family(
        "p3power-antimagic", lambda k: power(path(3), k), EDGE_ONLY, TargetKind(Cls.VERTEX, Kind.ANTIMAGIC),
        (1, 2, 3), lambda k: 1 <= k <= 4,
        "P_3^k, vertex-antimagic edge labelling"),
    "p2p3-antimagic": Family(
        "p2p3-antimagic", p2p3_product, EDGE_ONLY, TargetKind(Cls.VERTEX, Kind.ANTIMAGIC),
        tuple(p2p3_points()), lambda rs: 2 ** rs[0] * 3 ** rs[1] < 50,
        "P_2^r x P_3^s, vertex-antimagic edge labelling"),
}


class GuardrailError(ValueError):
    pass


def format_point(point) -> str:
    return ":".join(map(str, point)) if isinstance(point, tuple) else str(point)


def run_family(
    family: Family,
    points: Iterable,
    runs: int,
    params: AnnealParams,
    force: bool = False,
    timing: bool = True,
) -> Iterator[BenchRecord]:
    """One record per (point, run); run i uses seed ``params.seed + i``."""
    points = list(points)
    bad = [p for p in points if not family.guard(p)]
    if bad and not force:
        raise GuardrailError(f"{family.name}: points {bad} exceed the desk-scale range; pass force to run them")
    for point in points:
        g = family.graph(point)
        for i in range(runs):
            out = anneal(g, family.selector, family.target, params=replace(params, seed=params.seed + i))
            yield BenchRecord(family.name, format_point(point), out.seed, out.iterations, out.accepted,
                              out.wall_time if timing else None, out.solved)


@dataclass
class PointStats:
    param: str
    size: int
    runs: int
    solved: int
    mean_iterations: float


def summarize(family: Family, records: list[BenchRecord], points: Iterable) -> list[PointStats]:
    out = []
    for point in points:
        key = format_point(point)
        rows = [r for r in records if r.param == key]
        out.append(PointStats(key, family.size(point), len(rows), sum(r.solved for r in rows),
                              mean(r.iterations for r in rows)))
    return out


@dataclass
class Fits:
    exp_scale: float
    exp_rate: float
    lin_slope: float
    lin_intercept: float
    loglog_slope: Optional[float]

    def describe(self) -> str:
        lines = [f"exponential fit: y = {self.exp_scale:.4g} * exp({self.exp_rate:.4g} x)",
                 f"linear fit:      y = {self.lin_slope:.4g} x + {self.lin_intercept:.4g}"]
        if self.loglog_slope is not None:
            lines.append(f"power-law exponent (log-log slope): {self.loglog_slope:.4g}")
        return "\n".join(lines)


def fit_trends(xs: list[float], ys: list[float]) -> Fits:
    """Least-squares fits of log(y) ~ x, y ~ x and log(y+1) ~ log(x).

    Zero iteration counts (already solved at start) are lifted by one in the
    logarithmic fits.
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    rate, log_scale = np.polyfit(x, np.log(np.maximum(y, 1.0)), 1)
    slope, intercept = np.polyfit(x, y, 1)
    loglog = None
    if np.all(x > 0) and len(set(xs)) > 1:
        loglog = float(np.polyfit(np.log(x), np.log(y + 1.0), 1)[0])
    return Fits(math.exp(log_scale), float(rate), float(slope), float(intercept), loglog)
