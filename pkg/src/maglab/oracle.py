"""Exhaustive backtracking search for small instances (|U| up to about 12).

Labels are assigned depth first, most-shared elements first.  A branch
dies as soon as some target weight is complete and already violates the
kind (wrong magic constant, repeated weight, off-progression weight), or,
for magic targets, as soon as a partial weight can no longer reach the
constant with the labels still unused.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Optional

from .graph import Graph
from .labelling import (DomainSelector, Kind, Labelling, TargetKind, affected_targets,
                        detect_progression, label_pools, magic_constant_bounds, weight_terms)

DEFAULT_BUDGET = 50_000_000


class Mode(str, enum.Enum):
    FIRST = "first"
    COUNT = "count"
    ENUMERATE = "enumerate"


class Status(str, enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted-with-none"
    BUDGET_EXCEEDED = "budget-exceeded"


class BudgetExceeded(RuntimeError):
    pass


class _Stop(Exception):
    pass


@dataclass
class OracleQuery:
    graph: Graph
    selector: DomainSelector
    target: TargetKind
    mode: Mode = Mode.COUNT
    limit: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    k: Optional[int] = None  # restrict magic search to one constant


@dataclass
class OracleResult:
    """``census`` maps magic constant (magic), (a, d) (ad) or the detected
    progression or None (antimagic) to the number of labellings found."""

    status: Status
    count: int
    labellings: list[Labelling] = field(default_factory=list)
    census: dict[Hashable, int] = field(default_factory=dict)
    nodes: int = 0


class _Search:
    def __init__(self, q: OracleQuery, prune: bool):
        g, sel, tk = q.graph, q.selector, q.target
        tk.check(g, sel)
        self.q = q
        self.g, self.sel, self.tk = g, sel, tk
        self.prune = prune
        self.n = sel.size(g)
        self.terms = weight_terms(g, tk.target)
        self.m = len(self.terms)
        affects = affected_targets(g, tk.target)
        self.pools = label_pools(g, sel, tk.super_)
        block_of = {}
        for b, (elems, _) in enumerate(self.pools):
            for u in elems:
                block_of[u] = b
        universe = sel.universe(g)
        order = sorted(universe, key=lambda u: (-len(affects[u]), u))
        self.order = order
        self.block = [block_of[u] for u in order]
        self.order_affects = [affects[u] for u in order]
        self.remaining0 = [sum(1 for u in t if u in block_of) for t in self.terms]
        self.nodes = 0
        self.count = 0
        self.found: list[Labelling] = []
        self.census: Counter = Counter()

    # --- leaf handling ---------------------------------------------------
    def _emit(self, labels: list[int], key: Hashable) -> None:
        self.count += 1
        self.census[key] += 1
        mode = self.q.mode
        if mode is Mode.FIRST or (mode is Mode.ENUMERATE and (self.q.limit is None or len(self.found) < self.q.limit)):
            self.found.append(Labelling(list(labels), self.n, self.sel, self.tk.super_))
        if mode is Mode.FIRST or (mode is Mode.ENUMERATE and self.q.limit is not None
                                  and len(self.found) >= self.q.limit):
            raise _Stop

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.q.budget:
            raise BudgetExceeded

    # --- pruned depth-first search -----------------------------------------
    def _dfs_run(self, k: Optional[int]) -> None:
        tk = self.tk
        n = self.n
        labels = [0] * self.g.n_elements
        partial = [0] * self.m
        remaining = list(self.remaining0)
        used = [False] * (n + 1)
        used_w: Counter = Counter()
        kind = tk.kind
        a, d, m = tk.a, tk.d, self.m
        slots = [False] * m
        ranges = [list(p) for _, p in self.pools]

        def complete_ok(w: int) -> Optional[object]:
            # returns an undo token (truthy) or None if the weight is illegal
            if kind is Kind.MAGIC:
                return True if w == k else None
            if kind is Kind.ANTIMAGIC:
                if used_w[w]:
                    return None
                used_w[w] += 1
                return ("w", w)
            if d == 0:
                return True if w == a else None
            off = w - a
            if off < 0 or off % d or off // d >= m or slots[off // d]:
                return None
            slots[off // d] = True
            return ("s", off // d)

        def undo(token: object) -> None:
            if token is True:
                return
            tag, val = token
            if tag == "w":
                used_w[val] -= 1
            else:
                slots[val] = False

        def bound_ok(t: int) -> bool:
            rem = remaining[t]
            free = [x for x in range(1, n + 1) if not used[x]]
            return partial[t] + sum(free[:rem]) <= k <= partial[t] + sum(free[len(free) - rem:])

        # targets with no labelled contributor are complete from the start
        root_tokens = []
        for t in range(m):
            if remaining[t] == 0:
                tok = complete_ok(0)
                if tok is None:
                    for tk_ in root_tokens:
                        undo(tk_)
                    return
                root_tokens.append(tok)

        order, blocks, aff = self.order, self.block, self.order_affects
        depth_max = len(order)
        prune = self.prune
        magic = kind is Kind.MAGIC

        def rec(depth: int) -> None:
            if depth == depth_max:
                w = partial
                key = k if magic else ((a, d) if kind is Kind.AD else detect_progression(w))
                self._emit(labels, key)
                return
            u = order[depth]
            for x in ranges[blocks[depth]]:
                if used[x]:
                    continue
                self._tick()
                used[x] = True
                labels[u] = x
                tokens = []
                ok = True
                touched = aff[depth]
                for t in touched:
                    partial[t] += x
                    remaining[t] -= 1
                for t in touched:
                    if remaining[t] == 0:
                        tok = complete_ok(partial[t])
                        if tok is None:
                            ok = False
                            break
                        tokens.append(tok)
                if ok and magic and prune:
                    ok = all(remaining[t] == 0 or bound_ok(t) for t in touched)
                if ok:
                    rec(depth + 1)
                for tok in tokens:
                    undo(tok)
                for t in touched:
                    partial[t] -= x
                    remaining[t] += 1
                labels[u] = 0
                used[x] = False

        rec(0)

    def run_pruned(self) -> None:
        if self.tk.kind is Kind.MAGIC:
            if self.q.k is not None:
                ks = [self.q.k]
            else:
                lo, hi = magic_constant_bounds(self.g, self.sel, self.tk.target, self.tk.super_)
                ks = range(lo, hi + 1)
            for k in ks:
                self._dfs_run(k)
        else:
            self._dfs_run(None)

    # --- plain enumeration (self-check of the pruning) ---------------------
    def run_unpruned(self) -> None:
        tk = self.tk
        labels = [0] * self.g.n_elements
        perms = [itertools.permutations(list(p)) for _, p in self.pools]
        for combo in itertools.product(*[list(pm) for pm in perms]):
            self._tick()
            for (elems, _), values in zip(self.pools, combo):
                for u, x in zip(elems, values):
                    labels[u] = x
            w = [sum(labels[u] for u in t) for t in self.terms]
            if tk.kind is Kind.MAGIC:
                if max(w) != min(w) or (self.q.k is not None and w[0] != self.q.k):
                    continue
                key: Hashable = w[0]
            elif tk.kind is Kind.ANTIMAGIC:
                if len(set(w)) != len(w):
                    continue
                key = detect_progression(w)
            else:
                if sorted(w) != [tk.a + i * tk.d for i in range(len(w))]:
                    continue
                key = (tk.a, tk.d)
            self._emit(labels, key)


def oracle_search(q: OracleQuery, prune: bool = True) -> OracleResult:
    """Run the query; ``prune=False`` enumerates every bijection instead."""
    s = _Search(q, prune)
    status = None
    try:
        s.run_pruned() if prune else s.run_unpruned()
    except _Stop:
        pass
    except BudgetExceeded:
        status = Status.BUDGET_EXCEEDED
    if status is None:
        status = Status.FOUND if s.count else Status.EXHAUSTED
    census = dict(sorted(s.census.items(), key=lambda kv: (kv[0] is None, kv[0] if kv[0] is not None else 0)))
    return OracleResult(status, s.count, s.found, census, s.nodes)


def achievable_values(q: OracleQuery) -> dict[Hashable, int]:
    """Full census of realisable magic constants / (a, d) pairs with counts."""
    full = OracleQuery(q.graph, q.selector, q.target, Mode.COUNT, None, q.budget, q.k)
    res = oracle_search(full)
    if res.status is Status.BUDGET_EXCEEDED:
        raise BudgetExceeded(f"census exceeded the budget of {q.budget} node expansions")
    return res.census
