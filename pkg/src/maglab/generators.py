"""Graph families used in the experiments: K_n, paths, cycles, wheels,
generalized Petersen graphs, Cartesian products/powers and random trees."""

from __future__ import annotations

import heapq
import random
from functools import reduce

from .graph import Graph, GraphError, build_graph


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return build_graph(n, edges)


def path(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int, faces: bool = False) -> Graph:
    """C_n; with ``faces`` the bounded face 0,1,...,n-1,0 is attached."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    walks = [tuple(range(n)) + (0,)] if faces else []
    return build_graph(n, edges, walks)


def wheel(n: int, faces: bool = False) -> Graph:
    """Wheel with rim size ``n``; the hub is vertex ``n``.

    With ``faces`` the n triangles hub, i, i+1 are attached.
    """
    if n < 3:
        raise GraphError(f"wheel needs rim size >= 3, got {n}")
    hub = n
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, hub) for i in range(n)]
    walks = [(hub, i, (i + 1) % n, hub) for i in range(n)] if faces else []
    return build_graph(n + 1, edges, walks)


def generalized_petersen(n: int, k: int) -> Graph:
    """P(n, k): outer cycle 0..n-1, inner star polygon n..2n-1, spokes i--n+i."""
    if n < 3 or not (1 <= k and 2 * k < n):
        raise GraphError(f"generalized Petersen needs n >= 3 and 1 <= k < n/2, got ({n}, {k})")
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    return build_graph(2 * n, outer + inner + spokes)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """G1 x G2 with vertex (a, b) numbered a * |V2| + b."""
    if g1.n_faces or g2.n_faces:
        raise GraphError("cartesian product is defined only for face-free graphs")
    n2 = g2.n_vertices
    edges = []
    for a in range(g1.n_vertices):
        for (b, c) in g2.edges:
            edges.append((a * n2 + b, a * n2 + c))
    for (a, c) in g1.edges:
        for b in range(n2):
            edges.append((a * n2 + b, c * n2 + b))
    return build_graph(g1.n_vertices * n2, edges)


def power(g: Graph, r: int) -> Graph:
    """r-fold Cartesian power, folded from the left."""
    if r < 1:
        raise GraphError(f"power needs r >= 1, got {r}")
    return reduce(cartesian_product, [g] * (r - 1), g)


def p2p3_product(r: int, s: int) -> Graph:
    """P_2^r x P_3^s; either exponent may be zero but not both."""
    if r < 0 or s < 0 or r + s == 0:
        raise GraphError(f"need r, s >= 0 with r + s >= 1, got ({r}, {s})")
    parts = []
    if r:
        parts.append(power(path(2), r))
    if s:
        parts.append(power(path(3), s))
    return reduce(cartesian_product, parts)


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_labelled_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on ``n`` vertices (Pruefer sequence)."""
    if n < 2:
        raise GraphError(f"tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, prufer_decode(seq, n))


def from_spec(name: str, args: list[int], faces: bool = False) -> Graph:
    """Build a generator output from a CLI-style name plus integer args."""
    table = {
        "complete": (complete_graph, 1),
        "path": (path, 1),
        "cycle": (lambda n: cycle(n, faces), 1),
        "wheel": (lambda n: wheel(n, faces), 1),
        "petersen": (generalized_petersen, 2),
        "grid-p2p3": (p2p3_product, 2),
        "p3power": (lambda k: power(path(3), k), 1),
        "hypercube": (lambda d: power(path(2), d), 1),
        "tree": (random_labelled_tree, 2),
    }
    try:
        fn, arity = table[name]
    except KeyError:
        raise GraphError(f"unknown generator {name!r}; choose from {', '.join(sorted(table))}") from None
    if name == "petersen" and not args:
        args = [5, 2]
    if len(args) != arity:
        raise GraphError(f"generator {name!r} takes {arity} integer argument(s), got {len(args)}")
    return fn(*args)


GENERATOR_NAMES = ("complete", "path", "cycle", "wheel", "petersen", "grid-p2p3", "p3power", "hypercube", "tree")
