"""Objective functions minimised by the annealer.

All three are integer valued and vanish exactly on the labellings they
look for:

* ``f``: squared deviation of the weights from the ceiling of their mean
  (magic),
* ``g``: number of sort-adjacent equal weights (antimagic),
* ``h``: squared deviation of the sorted weights from a, a+d, a+2d, ...
  ((a,d)-antimagic).
"""

from __future__ import annotations

import enum
from bisect import bisect_left, insort
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Cls, Graph
from .labelling import Kind, Labelling, TargetKind, affected_targets, weights_of


class Family(str, enum.Enum):
    MAGIC_F = "f"
    ANTIMAGIC_G = "g"
    AD_H = "h"


_KIND_FAMILY = {Kind.MAGIC: Family.MAGIC_F, Kind.ANTIMAGIC: Family.ANTIMAGIC_G, Kind.AD: Family.AD_H}


class ObjectiveError(ValueError):
    pass


class StaleCacheError(RuntimeError):
    """The labelling changed behind the back of an :class:`IncrementalEvaluator`."""


@dataclass(frozen=True)
class Objective:
    family: Family
    target: Cls
    a: Optional[int] = None
    d: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family is Family.AD_H:
            if self.a is None or self.d is None or self.a < 1 or self.d < 0:
                raise ObjectiveError(f"h objective needs a >= 1 and d >= 0, got a={self.a}, d={self.d}")

    @classmethod
    def for_target(cls, tk: TargetKind) -> "Objective":
        return cls(_KIND_FAMILY[tk.kind], tk.target, tk.a, tk.d)

    def matches(self, tk: TargetKind) -> bool:
        return self == Objective.for_target(tk)

    @property
    def name(self) -> str:
        return f"{self.family.value}_{self.target.name[0]}"


def _ceil_mean(total: int, m: int) -> int:
    return -((-total) // m)


def f_value(weights: Sequence[int]) -> int:
    if not weights:
        raise ObjectiveError("objective over an empty set")
    c = _ceil_mean(sum(weights), len(weights))
    return sum((w - c) ** 2 for w in weights)


def g_value(weights: Sequence[int]) -> int:
    if not weights:
        raise ObjectiveError("objective over an empty set")
    w = sorted(weights)
    return sum(1 for i in range(len(w) - 1) if w[i] == w[i + 1])


def h_value(weights: Sequence[int], a: int, d: int) -> int:
    if not weights:
        raise ObjectiveError("objective over an empty set")
    w = sorted(weights)
    return (w[0] - a) ** 2 + sum((w[i + 1] - w[i] - d) ** 2 for i in range(len(w) - 1))


def value_of(weights: Sequence[int], obj: Objective) -> int:
    if obj.family is Family.MAGIC_F:
        return f_value(weights)
    if obj.family is Family.ANTIMAGIC_G:
        return g_value(weights)
    return h_value(weights, obj.a, obj.d)


def eval_f(g: Graph, lab: Labelling, target: Cls) -> int:
    return f_value(weights_of(g, lab, target))


def eval_g(g: Graph, lab: Labelling, target: Cls) -> int:
    return g_value(weights_of(g, lab, target))


def eval_h(g: Graph, lab: Labelling, target: Cls, a: int, d: int) -> int:
    return h_value(weights_of(g, lab, target), a, d)


def evaluate(g: Graph, lab: Labelling, obj: Objective) -> int:
    """Full recomputation of the objective."""
    return value_of(weights_of(g, lab, obj.target), obj)


class IncrementalEvaluator:
    """Cached weights plus per-family running state for swap moves.

    :meth:`swap` exchanges two labels in the bound labelling and returns the
    new objective value touching only the weights fed by those two
    elements.  Swapping the same pair again restores the previous state.
    """

    def __init__(self, g: Graph, lab: Labelling, obj: Objective):
        self.graph = g
        self.labelling = lab
        self.objective = obj
        self.affects = affected_targets(g, obj.target)
        self.weights = weights_of(g, lab, obj.target)
        if not self.weights:
            raise ObjectiveError("objective over an empty set")
        self.m = len(self.weights)
        self.family = obj.family
        if self.family is Family.MAGIC_F:
            self.total = sum(self.weights)
            self.sumsq = sum(w * w for w in self.weights)
        elif self.family is Family.ANTIMAGIC_G:
            self.counts = Counter(self.weights)
        else:
            self.a, self.d = obj.a, obj.d
            self.sorted = sorted(self.weights)
            self.h = h_value(self.sorted, self.a, self.d)
        self.version = lab.version

    @property
    def value(self) -> int:
        if self.family is Family.MAGIC_F:
            c = _ceil_mean(self.total, self.m)
            return self.sumsq - 2 * c * self.total + self.m * c * c
        if self.family is Family.ANTIMAGIC_G:
            return self.m - len(self.counts)
        return self.h

    def _h_term(self, i: int) -> int:
        sw = self.sorted
        if i == 0:
            return (sw[0] - self.a) ** 2
        return (sw[i] - sw[i - 1] - self.d) ** 2

    def _h_remove(self, x: int) -> None:
        sw = self.sorted
        i = bisect_left(sw, x)
        last = len(sw) - 1
        self.h -= self._h_term(i)
        if i < last:
            self.h -= self._h_term(i + 1)
        del sw[i]
        if i < last:
            self.h += self._h_term(i)

    def _h_insert(self, x: int) -> None:
        sw = self.sorted
        i = bisect_left(sw, x)
        if i < len(sw):
            self.h -= self._h_term(i)
        sw.insert(i, x)
        self.h += self._h_term(i)
        if i + 1 < len(sw):
            self.h += self._h_term(i + 1)

    def _shift(self, targets: tuple[int, ...], delta: int) -> None:
        w = self.weights
        fam = self.family
        if fam is Family.MAGIC_F:
            for t in targets:
                old = w[t]
                new = old + delta
                w[t] = new
                self.sumsq += new * new - old * old
            self.total += delta * len(targets)
        elif fam is Family.ANTIMAGIC_G:
            counts = self.counts
            for t in targets:
                old = w[t]
                c = counts[old]
                if c == 1:
                    del counts[old]
                else:
                    counts[old] = c - 1
                w[t] = old + delta
                counts[old + delta] += 1
        else:
            for t in targets:
                old = w[t]
                self._h_remove(old)
                w[t] = old + delta
                self._h_insert(old + delta)

    def swap(self, r: int, s: int) -> int:
        lab = self.labelling
        if lab.version != self.version:
            raise StaleCacheError(
                f"labelling is at version {lab.version} but the cache tracks version {self.version}")
        labels = lab.labels
        delta = labels[s] - labels[r]
        if r != s and delta:
            self._shift(self.affects[r], delta)
            self._shift(self.affects[s], -delta)
        lab.swap(r, s)
        self.version = lab.version
        return self.value

    def resync(self) -> None:
        """Rebuild every cache from the bound labelling."""
        self.__init__(self.graph, self.labelling, self.objective)


def eval_after_swap(
    g: Graph,
    lab: Labelling,
    obj: Objective,
    r: int,
    s: int,
    state: Optional[IncrementalEvaluator] = None,
) -> tuple[int, IncrementalEvaluator]:
    """Apply the swap of labels at global indices ``r``, ``s`` and return the new value.

    The labelling is mutated; call again with the same pair to undo.
    """
    if state is None:
        state = IncrementalEvaluator(g, lab, obj)
    elif state.labelling is not lab or state.objective != obj or state.graph is not g:
        raise StaleCacheError("cached state is bound to a different instance")
    return state.swap(r, s), state
