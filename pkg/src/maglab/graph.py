"""Graphs with vertices, edges and faces, plus their incidence tables.

Elements of the three classes share one flat index space: vertex ``i`` has
global index ``i``, edge ``j`` has ``|V| + j`` and face ``k`` has
``|V| + |E| + k``.  Labellings are stored against that index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Cls(str, enum.Enum):
    VERTEX = "v"
    EDGE = "e"
    FACE = "f"

    @classmethod
    def parse(cls, text: str) -> "Cls":
        key = text.strip().lower()
        aliases = {
            "v": cls.VERTEX, "vertex": cls.VERTEX, "vertices": cls.VERTEX,
            "e": cls.EDGE, "edge": cls.EDGE, "edges": cls.EDGE,
            "f": cls.FACE, "face": cls.FACE, "faces": cls.FACE,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown element class {text!r}") from None


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class FaceWalkError(GraphError):
    pass


class IdOutOfRangeError(GraphError):
    pass


def _frozen_sets(rows: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(r) for r in rows)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph with an optional list of faces (closed walks).

    Use :func:`build_graph` rather than the constructor; it validates the
    input and fills the incidence tables.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    # incidence tables, all with set semantics
    vertex_neighbours: tuple[frozenset[int], ...] = field(repr=False)
    vertex_edges: tuple[frozenset[int], ...] = field(repr=False)
    vertex_faces: tuple[frozenset[int], ...] = field(repr=False)
    edge_faces: tuple[frozenset[int], ...] = field(repr=False)
    face_vertices: tuple[frozenset[int], ...] = field(repr=False)
    face_edges: tuple[frozenset[int], ...] = field(repr=False)
    edge_index: dict[frozenset[int], int] = field(repr=False)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_elements(self) -> int:
        return self.n_vertices + self.n_edges + self.n_faces

    def count(self, cls: Cls) -> int:
        return {Cls.VERTEX: self.n_vertices, Cls.EDGE: self.n_edges, Cls.FACE: self.n_faces}[cls]

    def offset(self, cls: Cls) -> int:
        if cls is Cls.VERTEX:
            return 0
        if cls is Cls.EDGE:
            return self.n_vertices
        return self.n_vertices + self.n_edges

    def index(self, cls: Cls, ident: int) -> int:
        """Global index of element ``ident`` of class ``cls``."""
        self._check_id(cls, ident)
        return self.offset(cls) + ident

    def element(self, index: int) -> tuple[Cls, int]:
        """Inverse of :meth:`index`."""
        if not 0 <= index < self.n_elements:
            raise IdOutOfRangeError(f"global element index {index} out of range")
        for cls in (Cls.FACE, Cls.EDGE, Cls.VERTEX):
            off = self.offset(cls)
            if index >= off and self.count(cls):
                return cls, index - off
        raise AssertionError("unreachable")

    def degree(self, v: int) -> int:
        return len(self.vertex_edges[v])

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edge_index

    def _check_id(self, cls: Cls, ident: int) -> None:
        if not 0 <= ident < self.count(cls):
            raise IdOutOfRangeError(f"{cls.name.lower()} id {ident} out of range 0..{self.count(cls) - 1}")

    def incident(self, cls: Cls, ident: int, target: Cls) -> frozenset[int]:
        """Ids of class ``target`` incident (or adjacent) to the given element.

        vertex->vertex is adjacency, face->face is sharing an edge, and
        edge->edge is sharing an endpoint.
        """
        self._check_id(cls, ident)
        if cls is Cls.VERTEX:
            if target is Cls.VERTEX:
                return self.vertex_neighbours[ident]
            if target is Cls.EDGE:
                return self.vertex_edges[ident]
            return self.vertex_faces[ident]
        if cls is Cls.EDGE:
            u, v = self.edges[ident]
            if target is Cls.VERTEX:
                return frozenset((u, v))
            if target is Cls.EDGE:
                return (self.vertex_edges[u] | self.vertex_edges[v]) - {ident}
            return self.edge_faces[ident]
        if target is Cls.VERTEX:
            return self.face_vertices[ident]
        if target is Cls.EDGE:
            return self.face_edges[ident]
        out: set[int] = set()
        for e in self.face_edges[ident]:
            out |= self.edge_faces[e]
        out.discard(ident)
        return frozenset(out)

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self.edge_index[frozenset((u, v))]
        except KeyError:
            raise GraphError(f"no edge {{{u}, {v}}}") from None

    def without_faces(self) -> "Graph":
        return build_graph(self.n_vertices, self.edges, ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n_vertices, self.edges, self.faces) == (other.n_vertices, other.edges, other.faces)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.edges, self.faces))


def build_graph(
    vertex_count: int,
    edges: Iterable[Sequence[int]],
    faces: Iterable[Sequence[int]] = (),
) -> Graph:
    """Validate input and build a :class:`Graph`.

    Each face is a closed walk ``v0, ..., vk`` with ``v0 == vk``; every
    consecutive pair must be an edge.  Raises a :class:`GraphError`
    subclass naming the offending element.
    """
    if vertex_count < 0:
        raise GraphError("vertex count must be nonnegative")
    edge_list: list[tuple[int, int]] = []
    edge_index: dict[frozenset[int], int] = {}
    for j, pair in enumerate(edges):
        if len(pair) != 2:
            raise GraphError(f"edge {j} must have exactly two endpoints, got {tuple(pair)}")
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise IdOutOfRangeError(f"edge {j} = {{{u}, {v}}} references vertex {x} outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoopError(f"edge {j} is a self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in edge_index:
            raise DuplicateEdgeError(f"edge {j} = {{{u}, {v}}} duplicates edge {edge_index[key]}")
        edge_index[key] = j
        edge_list.append((u, v))

    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    v_edges: list[set[int]] = [set() for _ in range(vertex_count)]
    for j, (u, v) in enumerate(edge_list):
        nbrs[u].add(v)
        nbrs[v].add(u)
        v_edges[u].add(j)
        v_edges[v].add(j)

    face_list: list[tuple[int, ...]] = []
    f_vertices: list[set[int]] = []
    f_edges: list[set[int]] = []
    for k, walk in enumerate(faces):
        walk = tuple(int(x) for x in walk)
        if len(walk) < 2:
            raise FaceWalkError(f"face {k} walk {walk} is too short")
        if walk[0] != walk[-1]:
            raise FaceWalkError(f"face {k} walk {walk} is not closed")
        for x in walk:
            if not 0 <= x < vertex_count:
                raise IdOutOfRangeError(f"face {k} references vertex {x} outside 0..{vertex_count - 1}")
        fe: set[int] = set()
        for a, b in zip(walk, walk[1:]):
            key = frozenset((a, b))
            if a == b or key not in edge_index:
                raise FaceWalkError(f"face {k} uses non-edge {{{a}, {b}}}")
            fe.add(edge_index[key])
        face_list.append(walk)
        f_vertices.append(set(walk[1:]))
        f_edges.append(fe)

    v_faces: list[set[int]] = [set() for _ in range(vertex_count)]
    e_faces: list[set[int]] = [set() for _ in edge_list]
    for k in range(len(face_list)):
        for x in f_vertices[k]:
            v_faces[x].add(k)
        for j in f_edges[k]:
            e_faces[j].add(k)

    return Graph(
        n_vertices=vertex_count,
        edges=tuple(edge_list),
        faces=tuple(face_list),
        vertex_neighbours=_frozen_sets(nbrs),
        vertex_edges=_frozen_sets(v_edges),
        vertex_faces=_frozen_sets(v_faces),
        edge_faces=_frozen_sets(e_faces),
        face_vertices=_frozen_sets(f_vertices),
        face_edges=_frozen_sets(f_edges),
        edge_index=edge_index,
    )


def incident(g: Graph, cls: Cls, ident: int, target: Cls) -> frozenset[int]:
    return g.incident(cls, ident, target)
