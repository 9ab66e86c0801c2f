"""Text formats: graph files, labelling files and benchmark CSV rows.

All ids in files are 1-based.

Graph file::

    graph <|V|> <|E|> <|F|>
    e <u> <v>
    f <v1> <v2> ... <vk>      # closing repeat of v1 optional

Labelling file::

    labelling
    selector <v> <e> <f>
    super <0|1>
    target <vertices|edges|faces>
    kind magic | antimagic | ad <a> <d>
    n <n>
    solved <0|1>
    meta <key> <value...>
    <v|e|f> <id> <label>
    attest <magic k | antimagic distinct | ad a d | none>

Lines starting with ``#`` are comments.  MATGRAPH "Simple Graph Format"
and Pajek converters are not provided; :data:`CONVERTERS` is the place to
register them.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, TextIO

from .graph import Cls, Graph, build_graph
from .labelling import DomainSelector, Kind, Labelling, TargetKind

# name -> (reader(text) -> Graph, writer(Graph) -> text)
CONVERTERS: dict[str, tuple[Callable[[str], Graph], Callable[[Graph], str]]] = {}

TARGET_NAMES = {Cls.VERTEX: "vertices", Cls.EDGE: "edges", Cls.FACE: "faces"}


class FormatError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None, source: str = "<text>"):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + msg)


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(tokens: list[str], no: int, source: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", no, source) from None


def parse_graph(text: str, source: str = "<text>") -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    faces: list[tuple[int, ...]] = []
    for no, tok in _lines(text):
        if header is None:
            if tok[0] != "graph" or len(tok) != 4:
                raise FormatError("first line must be 'graph <|V|> <|E|> <|F|>'", no, source)
            header = _ints(tok[1:], no, source)
            continue
        if tok[0] == "e":
            if len(tok) != 3:
                raise FormatError("edge line must be 'e <u> <v>'", no, source)
            u, v = _ints(tok[1:], no, source)
            edges.append((u - 1, v - 1))
        elif tok[0] == "f":
            walk = [x - 1 for x in _ints(tok[1:], no, source)]
            if not walk:
                raise FormatError("empty face", no, source)
            if not (len(walk) >= 3 and walk[0] == walk[-1]):
                walk.append(walk[0])
            faces.append(tuple(walk))
        else:
            raise FormatError(f"unknown record {tok[0]!r}", no, source)
    if header is None:
        raise FormatError("missing 'graph' header", None, source)
    nv, ne, nf = header
    if (len(edges), len(faces)) != (ne, nf):
        raise FormatError(f"header announces {ne} edges and {nf} faces, file has {len(edges)} and {len(faces)}",
                          None, source)
    return build_graph(nv, edges, faces)


def format_graph(g: Graph) -> str:
    out = [f"graph {g.n_vertices} {g.n_edges} {g.n_faces}"]
    out += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    out += ["f " + " ".join(str(x + 1) for x in walk[:-1]) for walk in g.faces]
    return "\n".join(out) + "\n"


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read(), source=path)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


@dataclass
class LabellingRecord:
    labelling: Labelling
    target: TargetKind
    solved: Optional[bool] = None
    attestation: Optional[str] = None
    meta: dict[str, str] = field(default_factory=dict)


def _kind_text(tk: TargetKind) -> str:
    if tk.kind is Kind.AD:
        return f"ad {tk.a} {tk.d}"
    return tk.kind.value


def format_labelling(g: Graph, rec: LabellingRecord) -> str:
    lab, tk = rec.labelling, rec.target
    sel = lab.selector
    out = [
        "labelling",
        "selector {} {} {}".format(*sel.flags),
        f"super {int(tk.super_)}",
        f"target {TARGET_NAMES[tk.target]}",
        f"kind {_kind_text(tk)}",
        f"n {lab.n}",
    ]
    if rec.solved is not None:
        out.append(f"solved {int(rec.solved)}")
    out += [f"meta {k} {v}" for k, v in rec.meta.items()]
    for cls in sel.classes():
        for i, x in enumerate(lab.by_class(g, cls)):
            out.append(f"{cls.value} {i + 1} {x}")
    if rec.attestation is not None:
        out.append(f"attest {rec.attestation}")
    return "\n".join(out) + "\n"


def parse_labelling(text: str, g: Graph, source: str = "<text>") -> LabellingRecord:
    """Parse a labelling file against ``g``.

    Only structure is checked here (class sizes, ids, n); bijection and
    weights are the verifier's job.
    """
    fields: dict[str, list[str]] = {}
    meta: dict[str, str] = {}
    labels: dict[Cls, dict[int, int]] = {c: {} for c in Cls}
    attestation = None
    seen_header = False
    for no, tok in _lines(text):
        key = tok[0]
        if not seen_header:
            if tok != ["labelling"]:
                raise FormatError("first line must be 'labelling'", no, source)
            seen_header = True
        elif key in ("selector", "super", "target", "kind", "n", "solved"):
            fields[key] = tok[1:]
        elif key == "meta":
            if len(tok) < 2:
                raise FormatError("meta line needs a key", no, source)
            meta[tok[1]] = " ".join(tok[2:])
        elif key == "attest":
            attestation = " ".join(tok[1:])
        elif key in ("v", "e", "f"):
            if len(tok) != 3:
                raise FormatError("label line must be '<class> <id> <label>'", no, source)
            cls = Cls(key)
            ident, value = _ints(tok[1:], no, source)
            if not 1 <= ident <= g.count(cls):
                raise FormatError(f"{cls.name.lower()} id {ident} out of range 1..{g.count(cls)}", no, source)
            if ident - 1 in labels[cls]:
                raise FormatError(f"{key}{ident} labelled twice", no, source)
            labels[cls][ident - 1] = value
        else:
            raise FormatError(f"unknown record {key!r}", no, source)
    for required in ("selector", "target", "kind", "n"):
        if required not in fields:
            raise FormatError(f"missing '{required}' line", None, source)
    flags = _ints(fields["selector"], None, source)
    if len(flags) != 3 or any(x not in (0, 1) for x in flags):
        raise FormatError("selector needs three 0/1 flags", None, source)
    sel = DomainSelector(*(bool(x) for x in flags))
    super_ = fields.get("super", ["0"]) == ["1"]
    try:
        target = Cls.parse(fields["target"][0])
        kind_tok = fields["kind"]
        kind = Kind(kind_tok[0])
        a = d = None
        if kind is Kind.AD:
            a, d = _ints(kind_tok[1:3], None, source)
        tk = TargetKind(target, kind, a, d, super_)
    except (ValueError, IndexError) as exc:
        raise FormatError(f"bad target/kind: {exc}", None, source) from None
    (n,) = _ints(fields["n"], None, source)
    if n != sel.size(g):
        raise FormatError(f"file says n={n} but selector {sel} on this graph gives n={sel.size(g)}", None, source)
    per_class = {}
    for cls in Cls:
        if not sel.selects(cls):
            if labels[cls]:
                raise FormatError(f"labels given for unselected class {cls.name.lower()}", None, source)
            continue
        if len(labels[cls]) != g.count(cls):
            raise FormatError(f"expected {g.count(cls)} {cls.name.lower()} labels, got {len(labels[cls])}",
                              None, source)
        per_class[cls] = [labels[cls][i] for i in range(g.count(cls))]
    lab = Labelling.from_classes(g, sel, per_class.get(Cls.VERTEX, ()), per_class.get(Cls.EDGE, ()),
                                 per_class.get(Cls.FACE, ()), super_)
    solved = None if "solved" not in fields else fields["solved"] == ["1"]
    return LabellingRecord(lab, tk, solved, attestation, meta)


def read_labelling(path: str, g: Graph) -> LabellingRecord:
    with open(path) as fh:
        return parse_labelling(fh.read(), g, source=path)


BENCH_HEADER = ("family", "param", "seed", "iterations", "accepted", "wall_time", "solved")


@dataclass
class BenchRecord:
    family: str
    param: str
    seed: int
    iterations: int
    accepted: int
    wall_time: Optional[float]
    solved: bool

    def row(self) -> list[str]:
        wt = "" if self.wall_time is None else f"{self.wall_time:.4f}"
        return [self.family, self.param, str(self.seed), str(self.iterations), str(self.accepted), wt,
                str(int(self.solved))]


class BenchWriter:
    """CSV sink with a fixed header."""

    def __init__(self, fh: TextIO):
        self.writer = csv.writer(fh, lineterminator="\n")
        self.writer.writerow(BENCH_HEADER)

    def write(self, rec: BenchRecord) -> None:
        self.writer.writerow(rec.row())


def read_bench(fh: TextIO) -> list[BenchRecord]:
    reader = csv.DictReader(fh)
    if tuple(reader.fieldnames or ()) != BENCH_HEADER:
        raise FormatError(f"bench header must be {','.join(BENCH_HEADER)}")
    out = []
    for row in reader:
        out.append(BenchRecord(row["family"], row["param"], int(row["seed"]), int(row["iterations"]),
                               int(row["accepted"]), float(row["wall_time"]) if row["wall_time"] else None,
                               row["solved"] == "1"))
    return out
