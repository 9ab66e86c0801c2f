import pytest
from hypothesis import given, strategies as st

from maglab.generators import (cartesian_product, complete_graph, cycle, generalized_petersen, p2p3_product,
                               path, petersen, power, random_labelled_tree, wheel)
from maglab.graph import Cls, GraphError


def is_connected(g):
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for w in g.vertex_neighbours[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n_vertices


def degrees(g):
    return sorted(g.degree(v) for v in range(g.n_vertices))


@pytest.mark.parametrize("n, m", [(1, 0), (2, 1), (6, 15), (10, 45)])
def test_complete_graph(n, m):
    g = complete_graph(n)
    assert (g.n_vertices, g.n_edges, g.n_faces) == (n, m, 0)
    assert degrees(g) == [n - 1] * n


def test_paths_and_cycles():
    assert path(3).n_edges == 2
    assert path(2) == complete_graph(2)
    c = cycle(5, faces=True)
    assert c.n_edges == 5 and c.n_faces == 1
    assert len(c.incident(Cls.FACE, 0, Cls.EDGE)) == 5
    assert cycle(5).n_faces == 0


def test_wheels():
    assert wheel(3).n_vertices == 4 and wheel(3).n_edges == 6
    assert degrees(wheel(3)) == [3, 3, 3, 3]  # K4
    w5 = wheel(5)
    assert (w5.n_vertices, w5.n_edges) == (6, 10)
    assert w5.degree(5) == 5
    assert wheel(4, faces=True).n_faces == 4


def test_petersen():
    g = petersen()
    assert (g.n_vertices, g.n_edges) == (10, 15)
    assert degrees(g) == [3] * 10
    prism = generalized_petersen(3, 1)
    assert (prism.n_vertices, prism.n_edges) == (6, 9)


def test_products():
    g = cartesian_product(path(2), path(3))
    assert (g.n_vertices, g.n_edges) == (6, 7)
    big = p2p3_product(3, 1)
    assert (big.n_vertices, big.n_edges) == (24, 52)
    c4 = cartesian_product(path(2), path(2))
    assert degrees(c4) == [2, 2, 2, 2] and c4.n_edges == 4
    assert power(path(3), 1) == path(3)
    q3 = power(path(2), 3)
    assert (q3.n_vertices, q3.n_edges) == (8, 12) and degrees(q3) == [3] * 8
    p33 = power(path(3), 2)
    assert (p33.n_vertices, p33.n_edges) == (9, 12)


def test_product_vertex_numbering():
    g = cartesian_product(path(2), path(3))
    # vertex (a, b) is a*3 + b; (0,0)-(0,1) and (0,0)-(1,0) are edges
    assert g.has_edge(0, 1) and g.has_edge(0, 3) and not g.has_edge(0, 4)


@pytest.mark.parametrize("call", [
    lambda: complete_graph(0), lambda: path(1), lambda: cycle(2), lambda: wheel(2),
    lambda: generalized_petersen(4, 2), lambda: generalized_petersen(5, 0), lambda: power(path(2), 0),
    lambda: cartesian_product(cycle(3, faces=True), path(2)), lambda: random_labelled_tree(1, 0),
])
def test_parameter_errors(call):
    with pytest.raises(GraphError):
        call()


@given(st.integers(0, 8), st.integers(1, 4), st.integers(0, 8), st.integers(1, 4))
def test_product_counts(a, b, c, d):
    g1 = complete_graph(a + 1) if b % 2 else path(a + 2)
    g2 = complete_graph(c + 1) if d % 2 else path(c + 2)
    g = cartesian_product(g1, g2)
    assert g.n_vertices == g1.n_vertices * g2.n_vertices
    assert g.n_edges == g1.n_vertices * g2.n_edges + g2.n_vertices * g1.n_edges


@given(st.integers(2, 30), st.integers(0, 10**9))
def test_random_tree_is_a_tree(n, seed):
    g = random_labelled_tree(n, seed)
    assert g.n_edges == n - 1
    assert is_connected(g)


def test_small_trees():
    assert random_labelled_tree(2, 5) == complete_graph(2)
    for seed in range(20):
        assert degrees(random_labelled_tree(3, seed)) == [1, 1, 2]
        assert random_labelled_tree(9, seed).n_edges == 8


def test_tree_sampling_is_uniform_on_four_vertices():
    # 4^2 = 16 labelled trees on 4 vertices, all equally likely
    from collections import Counter
    counts = Counter(random_labelled_tree(4, s).edges for s in range(16000))
    assert len({frozenset(map(frozenset, e)) for e in counts}) == 16
    assert max(counts.values()) < 1.25 * min(counts.values())
