"""Immutable simple undirected graphs on vertices 0..n-1.

Everything downstream (spectra, thresholds, factor search) consumes this
representation: a canonical sorted edge set plus cached sorted adjacency
lists. All construction helpers return new values; nothing mutates a graph
after __init__.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

__all__ = [
    "Graph",
    "GraphError",
    "MalformedHeaderError",
    "MalformedEdgeError",
    "VertexRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "as_vertex_set",
    "standard_graph",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "matching_complement",
    "complement",
    "join",
    "disjoint_union",
    "delete_vertices",
    "induced_subgraph",
    "components",
    "odd_component_count",
    "edge_boundary",
    "parse_edge_list",
    "serialize_edge_list",
    "to_dot",
]

VertexSet = tuple


class GraphError(ValueError):
    """Base class for graph construction and parsing errors."""


class MalformedHeaderError(GraphError):
    pass


class MalformedEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class Graph:
    """Simple undirected graph with set-semantics edges.

    Vertices are 0..n-1. Edges are stored as a sorted tuple of (u, v) pairs
    with u < v; equality and hashing are label-sensitive (no isomorphism).
    """

    __slots__ = ("n", "edges", "adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable = ()):
        n = int(n)
        if n < 0:
            raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
        canon = set()
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n) or not (0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            canon.add((u, v))
        self.n = n
        self.edges = tuple(sorted(canon))
        self._edge_set = frozenset(self.edges)
        lists = [[] for _ in range(n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        self.adj = tuple(tuple(sorted(ns)) for ns in lists)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")
        return len(self.adj[v])

    def degrees(self) -> tuple:
        return tuple(len(ns) for ns in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def neighbors(self, v: int) -> tuple:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v]

    def regular_degree(self):
        """Common degree if the graph is regular, else None (n=0 gives 0)."""
        if self.n == 0:
            return 0
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def check_invariants(self) -> bool:
        """Revalidate internal consistency; used by tests."""
        for u, v in self.edges:
            assert 0 <= u < v < self.n
        assert len(set(self.edges)) == len(self.edges)
        for v, ns in enumerate(self.adj):
            assert list(ns) == sorted(set(ns))
            for w in ns:
                assert w != v
                assert (min(v, w), max(v, w)) in self._edge_set
        assert sum(self.degrees()) == 2 * len(self.edges)
        return True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def as_vertex_set(vertices: Iterable, n: int) -> VertexSet:
    """Normalize an iterable of vertex indices to a sorted unique tuple in [0, n)."""
    vs = tuple(sorted({int(v) for v in vertices}))
    for v in vs:
        if not 0 <= v < n:
            raise VertexRangeError(f"vertex {v} out of range for n={n}")
    return vs


# ---------------------------------------------------------------------------
# constructions


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"complete graph needs k >= 1, got {k}")
    return Graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def cycle_graph(k: int) -> Graph:
    # k < 3 would be a multigraph or a loop, both outside simple graphs
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def empty_graph(k: int) -> Graph:
    if k < 0:
        raise GraphError(f"empty graph needs k >= 0, got {k}")
    return Graph(k)


def matching_complement(k: int) -> Graph:
    """Complement of a perfect matching on k vertices (k even): K_k minus the matching."""
    if k < 0 or k % 2 != 0:
        raise GraphError(f"matching complement needs even k >= 0, got {k}")
    return complement(disjoint_union([complete_graph(2)] * (k // 2)))


_STANDARD = {
    "complete": complete_graph,
    "cycle": cycle_graph,
    "empty": empty_graph,
    "matching_complement_part": matching_complement,
}


def standard_graph(kind: str, k: int) -> Graph:
    try:
        builder = _STANDARD[kind]
    except KeyError:
        raise GraphError(f"unknown standard graph kind {kind!r}") from None
    return builder(k)


def complement(g: Graph) -> Graph:
    present = g._edge_set
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in present
    ]
    return Graph(g.n, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g2's vertices are shifted by g1.n."""
    off = g1.n
    edges = list(g1.edges)
    edges += [(u + off, v + off) for u, v in g2.edges]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, edges)


def disjoint_union(parts: Iterable) -> Graph:
    edges = []
    off = 0
    for part in parts:
        edges += [(u + off, v + off) for u, v in part.edges]
        off += part.n
    return Graph(off, edges)


def _subgraph_on(g: Graph, keep: VertexSet):
    mapping = {old: new for new, old in enumerate(keep)}
    edges = [
        (mapping[u], mapping[v])
        for u, v in g.edges
        if u in mapping and v in mapping
    ]
    return Graph(len(keep), edges), mapping


def delete_vertices(g: Graph, s: Iterable):
    """Remove S and relabel the rest contiguously.

    Returns (graph, mapping) where mapping sends kept old labels to new ones,
    so witnesses computed downstream can be lifted back.
    """
    s_t = as_vertex_set(s, g.n)
    drop = set(s_t)
    keep = tuple(v for v in range(g.n) if v not in drop)
    return _subgraph_on(g, keep)


def induced_subgraph(g: Graph, s: Iterable):
    """Induced subgraph on S, relabeled contiguously. Returns (graph, mapping)."""
    keep = as_vertex_set(s, g.n)
    return _subgraph_on(g, keep)


def components(g: Graph) -> list:
    """Connected components as sorted vertex tuples, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def odd_component_count(g: Graph) -> int:
    return sum(1 for comp in components(g) if len(comp) % 2 == 1)


def edge_boundary(g: Graph, a: Iterable, b: Iterable) -> int:
    """Number of edges with one endpoint in a and the other in b (disjoint sets)."""
    a_t = as_vertex_set(a, g.n)
    b_t = as_vertex_set(b, g.n)
    b_set = set(b_t)
    if b_set.intersection(a_t):
        raise GraphError("edge_boundary requires disjoint vertex sets")
    return sum(1 for u in a_t for w in g.adj[u] if w in b_set)


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """Parse the "n m" header plus m lines of "u v". Rejects loops and duplicates."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MalformedHeaderError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedHeaderError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedHeaderError(f"header must be two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedHeaderError(f"header values must be nonnegative, got {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedEdgeError(f"expected {m} edge lines, found {len(body)}")
    seen = set()
    edges = []
    for line in body:
        toks = line.split()
        if len(toks) != 2:
            raise MalformedEdgeError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise MalformedEdgeError(f"edge line must be two integers, got {line!r}") from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexRangeError(f"edge ({u},{v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def to_dot(g: Graph) -> str:
    lines = ["graph g {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
