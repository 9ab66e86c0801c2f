"""Simplified simulated annealing over label transpositions.

There is no temperature: a swap that lowers the objective is always kept,
and a swap that does not is kept with probability ``q`` only once more
than ``p`` proposals in a row have failed.  Everything else is reverted.
"""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass, field, replace
from statistics import mean
from typing import Callable, Optional

from .graph import Graph
from .labelling import (DomainSelector, Labelling, LabellingError, TargetKind,
                        label_pools, random_labelling, verify)
from .objectives import IncrementalEvaluator, Objective, evaluate

RNG_ALGORITHM = "python-random/mt19937"

ProgressCallback = Callable[[int, int, int], None]


@dataclass(frozen=True)
class AnnealParams:
    """Control parameters.

    ``p`` defaults to n(n-1)/2 with n = |U| and ``q`` to 2/p, capped at 1/2
    for the tiny universes where 2/p is not a probability.
    """

    p: Optional[int] = None
    q: Optional[float] = None
    max_iters: int = 1_000_000
    seed: int = 0
    report_every: int = 0
    debug: bool = False

    def resolved(self, n: int) -> "AnnealParams":
        p = self.p if self.p is not None else max(1, n * (n - 1) // 2)
        q = self.q if self.q is not None else min(2.0 / p, 0.5)
        if p < 1:
            raise ValueError(f"p must be >= 1, got {p}")
        if not 0.0 < q < 1.0:
            raise ValueError(f"q must lie strictly between 0 and 1, got {q}")
        if self.max_iters < 0:
            raise ValueError("max_iters must be nonnegative")
        return replace(self, p=p, q=q)


@dataclass
class AnnealOutcome:
    labelling: Labelling
    value: int
    iterations: int
    accepted: int
    worse_accepted: int
    solved: bool
    seed: int
    p: int
    q: float
    wall_time: float = 0.0
    rng: str = RNG_ALGORITHM


class SwapProposer:
    """Draws an unordered pair of distinct labelled elements uniformly.

    In super mode both elements come from the same block, so vertex labels
    stay inside 1..|V|.
    """

    def __init__(self, g: Graph, sel: DomainSelector, super_: bool):
        self.blocks = [elems for elems, _ in label_pools(g, sel, super_) if len(elems) >= 2]
        if not self.blocks:
            raise LabellingError("no legal swap: need two labelled elements in one label block")
        self.pairs = [len(b) * (len(b) - 1) // 2 for b in self.blocks]
        self.total_pairs = sum(self.pairs)

    def __call__(self, rng: random.Random) -> tuple[int, int]:
        block = self.blocks[0]
        if len(self.blocks) > 1:
            x = rng.randrange(self.total_pairs)
            for b, cnt in zip(self.blocks, self.pairs):
                if x < cnt:
                    block = b
                    break
                x -= cnt
        m = len(block)
        i = rng.randrange(m)
        j = rng.randrange(m - 1)
        if j >= i:
            j += 1
        return block[i], block[j]


def propose_swap(g: Graph, lab: Labelling, super_: bool, rng: random.Random) -> tuple[int, int]:
    return SwapProposer(g, lab.selector, super_)(rng)


def anneal(
    g: Graph,
    sel: DomainSelector,
    tk: TargetKind,
    obj: Optional[Objective] = None,
    params: AnnealParams = AnnealParams(),
    progress: Optional[ProgressCallback] = None,
    initial: Optional[Labelling] = None,
) -> AnnealOutcome:
    """Run the search until the objective hits 0 or ``max_iters`` proposals.

    ``max_iters = 0`` means no cap (the loop may never end).  On exhaustion
    the best labelling seen is returned with ``solved=False``.
    """
    tk.check(g, sel)
    if obj is None:
        obj = Objective.for_target(tk)
    elif not obj.matches(tk):
        raise ValueError(f"objective {obj} is inconsistent with target {tk}")
    n = sel.size(g)
    params = params.resolved(n)
    if params.max_iters == 0:
        warnings.warn("max_iters=0: the search runs until solved and may never terminate", stacklevel=2)

    start = time.perf_counter()
    rng = random.Random(params.seed)
    lab = initial.copy() if initial is not None else random_labelling(g, sel, tk.super_, rng)
    try:
        propose = SwapProposer(g, sel, tk.super_)
    except LabellingError:
        # a single admissible labelling: nothing to search
        val = evaluate(g, lab, obj)
        return AnnealOutcome(lab, val, 0, 0, 0, val == 0, params.seed, p=params.p, q=params.q,
                             wall_time=time.perf_counter() - start)
    state = IncrementalEvaluator(g, lab, obj)
    swap = state.swap
    rand = rng.random

    p, q, cap = params.p, params.q, params.max_iters
    val = state.value
    best_val, best_labels = val, list(lab.labels)
    it = accepted = worse = 0
    nb_miss = 0
    stride = params.report_every if progress else 0

    while val != 0 and (cap == 0 or it < cap):
        it += 1
        r, s = propose(rng)
        new_val = swap(r, s)
        if new_val < val:
            nb_miss = 0
            val = new_val
            accepted += 1
            if val < best_val:
                best_val = val
                best_labels = list(lab.labels)
        elif nb_miss > p and rand() <= q:
            nb_miss = 0
            val = new_val
            accepted += 1
            worse += 1
        else:
            nb_miss += 1
            swap(r, s)
        if params.debug:
            full = evaluate(g, lab, obj)
            if full != val:
                raise AssertionError(f"incremental value {val} != full value {full} at iteration {it}")
        if stride and it % stride == 0:
            progress(it, val, best_val)

    if val != best_val:
        lab.labels[:] = best_labels
        lab.version += 1
    solved = best_val == 0
    if solved:
        assert verify(g, lab, sel, tk).accepted
    return AnnealOutcome(lab, best_val, it, accepted, worse, solved, params.seed, p, q,
                         time.perf_counter() - start)


@dataclass
class MultiStartResult:
    best: AnnealOutcome
    runs: list[AnnealOutcome] = field(default_factory=list)

    @property
    def iterations(self) -> list[int]:
        return [r.iterations for r in self.runs]

    @property
    def mean_iterations(self) -> float:
        return mean(self.iterations)

    @property
    def solved_runs(self) -> int:
        return sum(r.solved for r in self.runs)


def multi_start(
    g: Graph,
    sel: DomainSelector,
    tk: TargetKind,
    obj: Optional[Objective] = None,
    params: AnnealParams = AnnealParams(),
    runs: int = 1,
    stop_on_solved: bool = False,
) -> MultiStartResult:
    """Independent runs with seeds ``seed, seed+1, ...``.

    ``best`` is the first solved run, otherwise the lowest final value.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    outs: list[AnnealOutcome] = []
    for i in range(runs):
        out = anneal(g, sel, tk, obj, replace(params, seed=params.seed + i))
        outs.append(out)
        if stop_on_solved and out.solved:
            break
    solved = [o for o in outs if o.solved]
    best = solved[0] if solved else min(outs, key=lambda o: o.value)
    return MultiStartResult(best, outs)
