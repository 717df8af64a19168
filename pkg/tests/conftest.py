"""Shared test helpers: reference graphs and independent brute-force oracles."""

import itertools
import random

from oddfactor import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def petersen_graph() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set, disjointness adjacency."""
    verts = list(itertools.combinations(range(5), 2))
    idx = {p: i for i, p in enumerate(verts)}
    edges = [
        (idx[p], idx[q])
        for p, q in itertools.combinations(verts, 2)
        if not (set(p) & set(q))
    ]
    return Graph(10, edges)


def cubic_no_matching_16() -> Graph:
    """Smallest-style 3-regular graph without a perfect matching.

    A central vertex feeds three 5-vertex gadgets (a missing-edge K4 plus a
    degree-2 attachment vertex); deleting the center leaves three odd
    components.
    """
    edges = []
    for i in range(3):
        base = 1 + 5 * i
        s, a, b, d, e = base, base + 1, base + 2, base + 3, base + 4
        edges += [(a, d), (a, e), (b, d), (b, e), (d, e), (s, a), (s, b), (0, s)]
    return Graph(16, edges)


def quartic_no_matching_22() -> Graph:
    """4-regular, connected, no perfect matching: two hubs and four gadgets
    (K5 minus an edge), each gadget sending one edge to each hub. Deleting
    both hubs leaves four odd components."""
    edges = []
    for i in range(4):
        base = 2 + 5 * i
        block = [base, base + 1, base + 2, base + 3, base + 4]
        for x in range(5):
            for y in range(x + 1, 5):
                if (x, y) != (0, 1):
                    edges.append((block[x], block[y]))
        edges += [(0, block[0]), (1, block[1])]
    return Graph(22, edges)


def brute_force_has_odd_factor(g: Graph, b: int) -> bool:
    """Independent oracle: try every edge subset. Only viable for small m."""
    m = len(g.edges)
    assert m <= 16, "brute force oracle limited to 16 edges"
    if g.n == 0:
        return True
    for mask in range(1 << m):
        degs = [0] * g.n
        for i in range(m):
            if mask >> i & 1:
                u, v = g.edges[i]
                degs[u] += 1
                degs[v] += 1
        if all(d % 2 == 1 and 1 <= d <= b for d in degs):
            return True
    return False
