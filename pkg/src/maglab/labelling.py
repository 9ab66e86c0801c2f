"""Labellings, element weights and the exact verifier."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .graph import Cls, Graph


class LabellingError(ValueError):
    pass


@dataclass(frozen=True)
class DomainSelector:
    """Which element classes carry labels: the (v, e, f) flags."""

    v: bool = False
    e: bool = False
    f: bool = False

    def __post_init__(self) -> None:
        if not (self.v or self.e or self.f):
            raise LabellingError("at least one of the v, e, f flags must be set")

    def selects(self, cls: Cls) -> bool:
        return {Cls.VERTEX: self.v, Cls.EDGE: self.e, Cls.FACE: self.f}[cls]

    def classes(self) -> tuple[Cls, ...]:
        return tuple(c for c in Cls if self.selects(c))

    def universe(self, g: Graph) -> list[int]:
        """Global indices of the labelled elements, in index order."""
        out: list[int] = []
        for cls in self.classes():
            off = g.offset(cls)
            out.extend(range(off, off + g.count(cls)))
        return out

    def size(self, g: Graph) -> int:
        return sum(g.count(c) for c in self.classes())

    @property
    def flags(self) -> tuple[int, int, int]:
        return int(self.v), int(self.e), int(self.f)

    def __str__(self) -> str:
        return "({},{},{})".format(*self.flags)


TOTAL = DomainSelector(v=True, e=True)
EDGE_ONLY = DomainSelector(e=True)
VERTEX_ONLY = DomainSelector(v=True)


class Kind(str, enum.Enum):
    MAGIC = "magic"
    ANTIMAGIC = "antimagic"
    AD = "ad"


@dataclass(frozen=True)
class TargetKind:
    """Target set S, labelling kind and the super flag.

    ``a`` and ``d`` are only meaningful for ``Kind.AD``; ``d = 0`` there is
    the same as magic with constant ``a``.
    """

    target: Cls
    kind: Kind
    a: Optional[int] = None
    d: Optional[int] = None
    super_: bool = False

    def __post_init__(self) -> None:
        if self.kind is Kind.AD:
            if self.a is None or self.d is None:
                raise LabellingError("(a,d)-antimagic target needs both a and d")
            if self.a < 1 or self.d < 0:
                raise LabellingError(f"(a,d)-antimagic needs a >= 1 and d >= 0, got ({self.a}, {self.d})")

    def check(self, g: Graph, sel: DomainSelector) -> None:
        if self.super_ and not sel.v:
            raise LabellingError("a super labelling requires vertex labels (v flag)")
        if g.count(self.target) == 0:
            raise LabellingError(f"target set {self.target.name.lower()} is empty in this graph")
        if sel.size(g) == 0:
            raise LabellingError("the labelled universe is empty")


@dataclass
class Labelling:
    """Labels for every element, by global index; 0 outside the universe."""

    labels: list[int]
    n: int
    selector: DomainSelector
    super_: bool = False
    version: int = field(default=0, compare=False)

    def label(self, g: Graph, cls: Cls, ident: int) -> int:
        return self.labels[g.index(cls, ident)]

    def swap(self, r: int, s: int) -> None:
        lab = self.labels
        lab[r], lab[s] = lab[s], lab[r]
        self.version += 1

    def copy(self) -> "Labelling":
        return Labelling(list(self.labels), self.n, self.selector, self.super_)

    def by_class(self, g: Graph, cls: Cls) -> list[int]:
        off = g.offset(cls)
        return self.labels[off:off + g.count(cls)]

    @classmethod
    def from_classes(
        cls,
        g: Graph,
        sel: DomainSelector,
        vertex: Sequence[int] = (),
        edge: Sequence[int] = (),
        face: Sequence[int] = (),
        super_: bool = False,
    ) -> "Labelling":
        """Build from per-class label lists; unselected classes get zeros."""
        labels: list[int] = []
        for c, given in ((Cls.VERTEX, vertex), (Cls.EDGE, edge), (Cls.FACE, face)):
            if sel.selects(c):
                if len(given) != g.count(c):
                    raise LabellingError(f"expected {g.count(c)} {c.name.lower()} labels, got {len(given)}")
                labels.extend(int(x) for x in given)
            else:
                if any(given):
                    raise LabellingError(f"{c.name.lower()} labels given but class not selected")
                labels.extend([0] * g.count(c))
        return cls(labels, sel.size(g), sel, super_)


@lru_cache(maxsize=64)
def weight_terms(g: Graph, cls: Cls) -> tuple[tuple[int, ...], ...]:
    """For each element of ``cls``, the global indices whose labels sum to its weight."""
    ov, oe, of = g.offset(Cls.VERTEX), g.offset(Cls.EDGE), g.offset(Cls.FACE)
    rows: list[tuple[int, ...]] = []
    if cls is Cls.VERTEX:
        for v in range(g.n_vertices):
            rows.append((ov + v,)
                        + tuple(oe + e for e in sorted(g.vertex_edges[v]))
                        + tuple(of + f for f in sorted(g.vertex_faces[v])))
    elif cls is Cls.EDGE:
        for j, (u, v) in enumerate(g.edges):
            rows.append((oe + j, ov + u, ov + v) + tuple(of + f for f in sorted(g.edge_faces[j])))
    else:
        for k in range(g.n_faces):
            rows.append((of + k,)
                        + tuple(ov + v for v in sorted(g.face_vertices[k]))
                        + tuple(oe + e for e in sorted(g.face_edges[k])))
    return tuple(rows)


@lru_cache(maxsize=64)
def affected_targets(g: Graph, target: Cls) -> tuple[tuple[int, ...], ...]:
    """Inverse of :func:`weight_terms`: per global index, the target ids it feeds."""
    out: list[list[int]] = [[] for _ in range(g.n_elements)]
    for t, terms in enumerate(weight_terms(g, target)):
        for u in terms:
            out[u].append(t)
    return tuple(tuple(x) for x in out)


def weight(g: Graph, lab: Labelling, cls: Cls, ident: int) -> int:
    g.index(cls, ident)  # validates the id
    labels = lab.labels
    return sum(labels[u] for u in weight_terms(g, cls)[ident])


def weights_of(g: Graph, lab: Labelling, target: Cls) -> list[int]:
    labels = lab.labels
    return [sum(labels[u] for u in terms) for terms in weight_terms(g, target)]


def label_pools(g: Graph, sel: DomainSelector, super_: bool) -> list[tuple[list[int], range]]:
    """Partition of the universe into (elements, label range) blocks.

    Without ``super_`` there is one block; with it the vertices own
    labels 1..|V| and every other labelled element the rest.
    """
    universe = sel.universe(g)
    n = len(universe)
    if not super_:
        return [(universe, range(1, n + 1))]
    if not sel.v:
        raise LabellingError("a super labelling requires vertex labels (v flag)")
    nv = g.n_vertices
    verts = [u for u in universe if u < nv]
    rest = [u for u in universe if u >= nv]
    return [(verts, range(1, nv + 1)), (rest, range(nv + 1, n + 1))]


def random_labelling(
    g: Graph,
    sel: DomainSelector,
    super_: bool = False,
    seed: int | random.Random | None = None,
) -> Labelling:
    """Uniform random bijection of the universe onto 1..n (partition-respecting if super)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    labels = [0] * g.n_elements
    for elems, pool in label_pools(g, sel, super_):
        values = list(pool)
        rng.shuffle(values)
        for u, x in zip(elems, values):
            labels[u] = x
    return Labelling(labels, sel.size(g), sel, super_)


def identity_labelling(g: Graph, sel: DomainSelector, super_: bool = False) -> Labelling:
    labels = [0] * g.n_elements
    for elems, pool in label_pools(g, sel, super_):
        for u, x in zip(elems, pool):
            labels[u] = x
    return Labelling(labels, sel.size(g), sel, super_)


def multiplicities(g: Graph, target: Cls) -> list[int]:
    """How many target weights each global index contributes to."""
    return [len(t) for t in affected_targets(g, target)]


def weight_sum_bounds(g: Graph, sel: DomainSelector, target: Cls, super_: bool = False) -> tuple[int, int]:
    """Min and max of the sum of all target weights over every admissible labelling.

    Within each label block the sum is a dot product of multiplicities and
    labels, so the rearrangement inequality gives both extremes.
    """
    mult = multiplicities(g, target)
    lo = hi = 0
    for elems, pool in label_pools(g, sel, super_):
        m = sorted(mult[u] for u in elems)
        labs = list(pool)
        lo += sum(a * b for a, b in zip(m, reversed(labs)))
        hi += sum(a * b for a, b in zip(m, labs))
    return lo, hi


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def magic_constant_bounds(g: Graph, sel: DomainSelector, target: Cls, super_: bool = False) -> tuple[int, int]:
    """Interval outside of which no magic constant is possible (may be empty).

    Intersects the per-element bound (a weight is at least the sum of its
    smallest possible labels) with the total-sum bound divided by |S|.
    """
    pools = label_pools(g, sel, super_)
    block_of: dict[int, int] = {}
    for b, (elems, _) in enumerate(pools):
        for u in elems:
            block_of[u] = b
    sorted_pools = [sorted(p) for _, p in pools]
    lo_elem, hi_elem = 0, None
    for terms in weight_terms(g, target):
        counts = [0] * len(pools)
        for u in terms:
            if u in block_of:
                counts[block_of[u]] += 1
        lo = sum(sum(sp[:c]) for sp, c in zip(sorted_pools, counts))
        hi = sum(sum(sp[len(sp) - c:]) if c else 0 for sp, c in zip(sorted_pools, counts))
        lo_elem = max(lo_elem, lo)
        hi_elem = hi if hi_elem is None else min(hi_elem, hi)
    m = g.count(target)
    wlo, whi = weight_sum_bounds(g, sel, target, super_)
    return max(lo_elem, _ceil_div(wlo, m)), min(hi_elem or 0, whi // m)


def detect_progression(weights: Sequence[int]) -> Optional[tuple[int, int]]:
    """(a, d) if the sorted weights form an arithmetic progression, else None."""
    if not weights:
        return None
    w = sorted(weights)
    if len(w) == 1:
        return w[0], 0
    d = w[1] - w[0]
    if all(w[i + 1] - w[i] == d for i in range(len(w) - 1)):
        return w[0], d
    return None


@dataclass
class VerifyReport:
    """Structured outcome of :func:`verify`."""

    target: Cls
    kind: Kind
    bijection_ok: bool
    super_ok: Optional[bool]
    kind_ok: Optional[bool]
    weights: list[int]
    magic_constant: Optional[int] = None
    progression: Optional[tuple[int, int]] = None
    mean_weight: Optional[Fraction] = None
    violations: list[str] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return bool(self.bijection_ok and self.super_ok is not False and self.kind_ok)

    def attestation(self) -> str:
        """One-line summary used in labelling files; stable across reloads."""
        if not self.accepted:
            return "none"
        if self.kind is Kind.MAGIC:
            return f"magic {self.magic_constant}"
        if self.kind is Kind.AD:
            a, d = self.progression
            return f"ad {a} {d}"
        return "antimagic distinct"

    def summary(self) -> str:
        name = self.target.name.lower()
        lines = [f"{'ACCEPTED' if self.accepted else 'REJECTED'}: {name}-{self.kind.value}"]
        lines.append(f"  bijection: {'ok' if self.bijection_ok else 'FAILED'}")
        if self.super_ok is not None:
            lines.append(f"  super: {'ok' if self.super_ok else 'FAILED'}")
        if self.magic_constant is not None:
            lines.append(f"  magic constant {self.magic_constant}")
        if self.progression is not None:
            lines.append(f"  weights form progression a={self.progression[0]} d={self.progression[1]}")
        if self.mean_weight is not None:
            lines.append(f"  label-multiplicity identity: sum of weights / |S| = {self.mean_weight}")
        lines.extend(f"  violation: {v}" for v in self.violations)
        return "\n".join(lines)


def check_bijection(g: Graph, lab: Labelling, sel: DomainSelector) -> list[str]:
    problems: list[str] = []
    universe = set(sel.universe(g))
    n = len(universe)
    seen: dict[int, int] = {}
    for u, x in enumerate(lab.labels):
        cls, ident = g.element(u)
        name = f"{cls.value}{ident + 1}"
        if u not in universe:
            if x != 0:
                problems.append(f"unselected element {name} has nonzero label {x}")
            continue
        if not 1 <= x <= n:
            problems.append(f"label {x} of {name} outside 1..{n}")
        elif x in seen:
            oc, oi = g.element(seen[x])
            problems.append(f"label {x} repeated on {oc.value}{oi + 1} and {name}")
        else:
            seen[x] = u
    return problems


def verify(g: Graph, lab: Labelling, sel: DomainSelector, tk: TargetKind) -> VerifyReport:
    """Check bijection, super partition and the requested kind on S."""
    if lab.selector != sel or len(lab.labels) != g.n_elements or lab.n != sel.size(g):
        raise LabellingError(
            f"labelling built for selector {lab.selector} with {len(lab.labels)} elements "
            f"does not match selector {sel} on a graph with {g.n_elements} elements"
        )
    tk.check(g, sel)
    problems = check_bijection(g, lab, sel)
    super_ok = None
    if tk.super_:
        nv = g.n_vertices
        bad = [v for v in range(nv) if not 1 <= lab.labels[v] <= nv]
        super_ok = not bad
        problems.extend(f"super: vertex v{v + 1} has label {lab.labels[v]} > |V|={nv}" for v in bad)

    w = weights_of(g, lab, tk.target)
    bijection_ok = not any(not p.startswith("super:") for p in problems)
    report = VerifyReport(tk.target, tk.kind, bijection_ok, super_ok, None, w, violations=problems)
    report.progression = detect_progression(w)
    total = sum(x * m for x, m in zip(lab.labels, multiplicities(g, tk.target)))
    report.mean_weight = Fraction(total, len(w))
    if not report.bijection_ok:
        return report

    tag = tk.target.value
    if tk.kind is Kind.MAGIC:
        bad = next((i for i in range(1, len(w)) if w[i] != w[0]), None)
        report.kind_ok = bad is None
        if bad is None:
            report.magic_constant = w[0]
            assert report.mean_weight == w[0]
        else:
            report.violations.append(f"wt({tag}1)={w[0]} != wt({tag}{bad + 1})={w[bad]}")
    elif tk.kind is Kind.ANTIMAGIC:
        first: dict[int, int] = {}
        dup = None
        for i, x in enumerate(w):
            if x in first:
                dup = (first[x], i)
                break
            first[x] = i
        report.kind_ok = dup is None
        if dup is not None:
            i, j = dup
            report.violations.append(f"wt({tag}{i + 1}) = wt({tag}{j + 1}) = {w[i]}")
    else:
        expected = [tk.a + i * tk.d for i in range(len(w))]
        got = sorted(w)
        report.kind_ok = got == expected
        if not report.kind_ok:
            i = next(i for i in range(len(w)) if got[i] != expected[i])
            report.violations.append(f"sorted weight #{i + 1} is {got[i]}, expected a+{i}d = {expected[i]}")
    return report

