"""Integer program for magic labellings, written in CPLEX LP text format.

Variables: binary ``x_i_j`` (element with index i gets label j) and
continuous ``y_k >= 0`` (one per target element, |weight - K|).  The
assignment polytope is written as row and column sums so that the
constraint matrix stays in {0, +-1, +-j}.  No solver is bundled.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterator, TextIO

from .graph import Graph
from .labelling import (DomainSelector, Kind, LabellingError, TargetKind, magic_constant_bounds,
                        weight_terms)


class IlpError(ValueError):
    pass


@dataclass
class Constraint:
    name: str
    coeffs: dict[str, int]
    sense: str  # one of "=", ">=", "<="
    rhs: int

    def holds(self, point: dict[str, float]) -> bool:
        lhs = sum(c * point.get(v, 0) for v, c in self.coeffs.items())
        return {"=": lhs == self.rhs, ">=": lhs >= self.rhs, "<=": lhs <= self.rhs}[self.sense]


@dataclass
class IlpModel:
    n: int
    K: int
    beta: dict[int, int]  # global element index -> 1-based variable index
    binaries: list[str] = field(default_factory=list)
    continuous: list[str] = field(default_factory=list)
    objective: dict[str, int] = field(default_factory=dict)
    constraints: list[Constraint] = field(default_factory=list)

    @property
    def n_variables(self) -> int:
        return len(self.binaries) + len(self.continuous)

    def encode(self, labels: list[int]) -> dict[str, int]:
        """0/1 point of the x variables for a labelling (by global index)."""
        point = {v: 0 for v in self.binaries}
        for u, i in self.beta.items():
            point[xname(i, labels[u])] = 1
        return point

    def minimal_y(self, point: dict[str, int]) -> dict[str, int]:
        """Smallest feasible value of every y given the x part of ``point``.

        Read straight off the constraint rows: each ``y + sum(...) >= rhs``
        row gives a lower bound on its single y variable.
        """
        lower = {y: 0 for y in self.continuous}
        for c in self.constraints:
            ys = [v for v in c.coeffs if v in lower]
            if not ys:
                continue
            (y,) = ys
            rest = sum(coef * point.get(v, 0) for v, coef in c.coeffs.items() if v != y)
            if c.sense != ">=" or c.coeffs[y] != 1:
                raise IlpError(f"unexpected row shape in {c.name}")
            lower[y] = max(lower[y], c.rhs - rest)
        return lower


def xname(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def yname(k: int) -> str:
    return f"y_{k}"


def build_ilp(g: Graph, sel: DomainSelector, tk: TargetKind, K: int) -> IlpModel:
    """Model whose optimum is 0 iff a magic labelling with constant K exists."""
    if tk.kind is not Kind.MAGIC:
        raise IlpError("only magic labellings have an ILP formulation here")
    try:
        tk.check(g, sel)
    except LabellingError as exc:
        raise IlpError(str(exc)) from exc
    if tk.super_:
        raise IlpError("super labellings are not encoded in the ILP model")
    universe = sel.universe(g)
    n = len(universe)
    beta = {u: i for i, u in enumerate(universe, start=1)}
    model = IlpModel(n=n, K=K, beta=beta)
    labels = range(1, n + 1)
    model.binaries = [xname(i, j) for i in labels for j in labels]
    for i in labels:
        model.constraints.append(Constraint(f"row_{i}", {xname(i, j): 1 for j in labels}, "=", 1))
    for j in labels:
        model.constraints.append(Constraint(f"col_{j}", {xname(i, j): 1 for i in labels}, "=", 1))
    for k, terms in enumerate(weight_terms(g, tk.target), start=1):
        y = yname(k)
        model.continuous.append(y)
        model.objective[y] = 1
        expr: dict[str, int] = {}
        for u in terms:
            if u in beta:
                for j in labels:
                    expr[xname(beta[u], j)] = j
        # y - (wt - K) >= 0  and  y + (wt - K) >= 0
        model.constraints.append(Constraint(f"absneg_{k}", {y: 1, **{v: -c for v, c in expr.items()}}, ">=", -K))
        model.constraints.append(Constraint(f"abspos_{k}", {y: 1, **expr}, ">=", K))
    return model


def feasible_k_range(g: Graph, sel: DomainSelector, tk: TargetKind) -> range:
    lo, hi = magic_constant_bounds(g, sel, tk.target, tk.super_)
    return range(lo, hi + 1)


def ilp_sweep(g: Graph, sel: DomainSelector, tk: TargetKind) -> Iterator[tuple[int, IlpModel]]:
    """One model per K in the feasible interval."""
    for K in feasible_k_range(g, sel, tk):
        yield K, build_ilp(g, sel, tk, K)


def _linear(coeffs: dict[str, int]) -> str:
    parts = []
    for v, c in coeffs.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = v if mag == 1 else f"{mag} {v}"
        parts.append(f"{sign} {term}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def _wrap(text: str, width: int = 200) -> list[str]:
    lines, cur = [], ""
    for tok in text.split(" "):
        if cur and len(cur) + len(tok) + 1 > width:
            lines.append(cur)
            cur = tok
        else:
            cur = f"{cur} {tok}" if cur else tok
    lines.append(cur)
    return lines


def write_model(m: IlpModel, sink: TextIO | None = None) -> str:
    """Serialize in LP format; the same model always gives the same bytes."""
    if not m.constraints or not m.binaries:
        raise IlpError("refusing to write a model without variables or constraints")
    out = io.StringIO()
    out.write(f"\\ magic labelling model: n={m.n} labels, K={m.K}\n")
    out.write("Minimize\n")
    for line in _wrap(f"obj: {_linear(m.objective)}"):
        out.write(f" {line}\n")
    out.write("Subject To\n")
    sense = {"=": "=", ">=": ">=", "<=": "<="}
    for c in m.constraints:
        body = _wrap(f"{c.name}: {_linear(c.coeffs)} {sense[c.sense]} {c.rhs}")
        for line in body:
            out.write(f" {line}\n")
    out.write("Bounds\n")
    for y in m.continuous:
        out.write(f" {y} >= 0\n")
    out.write("Binary\n")
    for line in _wrap(" ".join(m.binaries)):
        out.write(f" {line}\n")
    out.write("End\n")
    text = out.getvalue()
    if sink is not None:
        sink.write(text)
    return text
