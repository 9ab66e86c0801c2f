import pytest
from hypothesis import given

from maglab.fileio import format_graph, parse_graph
from maglab.graph import (Cls, DuplicateEdgeError, FaceWalkError, GraphError, IdOutOfRangeError,
                          SelfLoopError, build_graph)

from strategies import small_graphs


def triangle(with_face=True):
    return build_graph(3, [(0, 1), (1, 2), (0, 2)], [(0, 1, 2, 0)] if with_face else [])


def test_k2():
    g = build_graph(2, [(0, 1)], [])
    assert g.incident(Cls.VERTEX, 0, Cls.EDGE) == {0}
    assert g.incident(Cls.EDGE, 0, Cls.VERTEX) == {0, 1}
    assert g.n_faces == 0
    assert g.incident(Cls.VERTEX, 1, Cls.FACE) == frozenset()


def test_triangle_face_incidence():
    g = triangle()
    assert g.incident(Cls.FACE, 0, Cls.VERTEX) == {0, 1, 2}
    assert g.incident(Cls.FACE, 0, Cls.EDGE) == {0, 1, 2}
    assert g.incident(Cls.VERTEX, 0, Cls.FACE) == {0}
    assert all(g.incident(Cls.EDGE, e, Cls.FACE) == {0} for e in range(3))


def test_face_adjacency_through_shared_edge():
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)], [(0, 1, 2, 0), (1, 3, 2, 1)])
    assert g.incident(Cls.FACE, 0, Cls.FACE) == {1}
    assert g.incident(Cls.FACE, 1, Cls.FACE) == {0}


def test_face_walk_using_non_edge():
    with pytest.raises(FaceWalkError, match=r"non-edge \{2, 0\}"):
        build_graph(3, [(0, 1), (1, 2)], [(0, 1, 2, 0)])


@pytest.mark.parametrize("edges, faces, exc", [
    ([(0, 0)], [], SelfLoopError),
    ([(0, 1), (1, 0)], [], DuplicateEdgeError),
    ([(0, 3)], [], IdOutOfRangeError),
    ([(0, 1), (1, 2), (0, 2)], [(0, 1, 2)], FaceWalkError),
    ([(0, 1), (1, 2), (0, 2)], [(0, 1, 5, 0)], IdOutOfRangeError),
])
def test_rejects_invalid_input(edges, faces, exc):
    with pytest.raises(exc):
        build_graph(3, edges, faces)


def test_invalid_id_lookup():
    with pytest.raises(IdOutOfRangeError):
        triangle().incident(Cls.VERTEX, 7, Cls.EDGE)
    assert issubclass(IdOutOfRangeError, GraphError)


def test_repeated_walk_vertices_count_once():
    # walk 0-1-2-0-1-2-0 visits every vertex and edge twice
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)], [(0, 1, 2, 0, 1, 2, 0)])
    assert g.face_vertices[0] == {0, 1, 2}
    assert g.face_edges[0] == {0, 1, 2}


def test_global_index_roundtrip():
    g = triangle()
    for cls in Cls:
        for i in range(g.count(cls)):
            assert g.element(g.index(cls, i)) == (cls, i)


@given(small_graphs())
def test_incidence_symmetry(g):
    for v in range(g.n_vertices):
        for e in range(g.n_edges):
            assert (e in g.vertex_edges[v]) == (v in g.edges[e])
        for f in range(g.n_faces):
            assert (f in g.vertex_faces[v]) == (v in g.face_vertices[f])
    for e in range(g.n_edges):
        for f in range(g.n_faces):
            assert (f in g.edge_faces[e]) == (e in g.face_edges[f])


@given(small_graphs(faces=False))
def test_handshake(g):
    assert sum(len(g.vertex_edges[v]) for v in range(g.n_vertices)) == 2 * g.n_edges


@given(small_graphs())
def test_serialization_preserves_incidence(g):
    h = parse_graph(format_graph(g))
    assert h == g
    for name in ("vertex_neighbours", "vertex_edges", "vertex_faces", "edge_faces", "face_vertices", "face_edges"):
        assert getattr(h, name) == getattr(g, name)
