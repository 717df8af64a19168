"""Exact deciders for odd [1,b]-factor existence, with certificates.

Two independent routes answer the same question:

* check_amahashi enumerates vertex subsets S and tests the criterion
  o(G-S) <= b|S|; a failure yields a violation witness.
* find_odd_factor backtracks over edges and either produces a spanning
  subgraph with every degree odd and in [1, b], or proves none exists.

For odd b the two must agree on every graph; tests enforce exactly that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, as_vertex_set, components, delete_vertices, edge_boundary

__all__ = [
    "FactorCertificate",
    "AmahashiViolation",
    "CertificateCheck",
    "check_amahashi",
    "find_odd_factor",
    "verify_certificate",
    "small_boundary_components",
]

DEFAULT_MAX_N = 22
DEFAULT_MAX_EDGES = 64


@dataclass(frozen=True)
class FactorCertificate:
    """Edge subset of the host graph in which every vertex degree is odd and in [1, b]."""

    edges: tuple
    degrees: tuple

    def to_json_dict(self) -> dict:
        return {"kind": "factor", "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class AmahashiViolation:
    """A vertex set S with more odd components in G-S than b|S| allows."""

    s: tuple
    odd_components: tuple  # in original labels
    o: int
    bound: int

    def to_json_dict(self) -> dict:
        return {"kind": "violation", "S": list(self.s), "o": self.o, "bound": self.bound}


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def _check_b(b: int) -> None:
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be a positive odd integer, got {b}")


def _odd_components_masked(adj_masks, n: int, deleted: int) -> int:
    """Count odd components of the graph restricted to vertices outside `deleted`.

    Bitmask flood fill; avoids building Graph objects in the subset loop.
    """
    remaining = ((1 << n) - 1) & ~deleted
    odd = 0
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            f = frontier
            while f:
                vbit = f & -f
                f ^= vbit
                reach |= adj_masks[vbit.bit_length() - 1]
            frontier = reach & remaining & ~comp
            comp |= frontier
        if comp.bit_count() % 2 == 1:
            odd += 1
        remaining &= ~comp
    return odd


def check_amahashi(g: Graph, b: int, max_n: int = DEFAULT_MAX_N):
    """Test o(G-S) <= b|S| over every subset S of V(G).

    Returns None when the criterion holds (an odd [1,b]-factor exists for odd
    b), otherwise an AmahashiViolation for the smallest, lexicographically
    first violating S. Subsets are enumerated by increasing cardinality so the
    search short-circuits on the most informative witness.
    """
    _check_b(b)
    n = g.n
    if n > max_n:
        raise ValueError(f"graph order {n} exceeds the exhaustive-search guard {max_n}")
    adj_masks = [sum(1 << w for w in ns) for ns in g.adj]
    for size in range(n + 1):
        bound = b * size
        for combo in itertools.combinations(range(n), size):
            deleted = 0
            for v in combo:
                deleted |= 1 << v
            o = _odd_components_masked(adj_masks, n, deleted)
            if o > bound:
                return _build_violation(g, combo, o, bound)
    return None


def _build_violation(g: Graph, s, o: int, bound: int) -> AmahashiViolation:
    h, mapping = delete_vertices(g, s)
    back = {new: old for old, new in mapping.items()}
    odd = tuple(
        tuple(back[v] for v in comp)
        for comp in components(h)
        if len(comp) % 2 == 1
    )
    assert len(odd) == o
    return AmahashiViolation(s=tuple(s), odd_components=odd, o=o, bound=bound)


def find_odd_factor(g: Graph, b: int, max_edges: int = DEFAULT_MAX_EDGES):
    """Exact search for a spanning subgraph with all degrees odd and in [1, b].

    Returns a FactorCertificate or None; never a false negative. Edges are
    decided depth-first, grouped by vertex in nonincreasing-degree order. A
    branch dies as soon as either endpoint can no longer reach an odd degree
    in [1, b] with its remaining undecided edges.
    """
    _check_b(b)
    m = len(g.edges)
    if m > max_edges:
        raise ValueError(f"edge count {m} exceeds the search guard {max_edges}")
    n = g.n
    if n == 0:
        return FactorCertificate(edges=(), degrees=())
    degs = g.degrees()
    if n % 2 == 1 or min(degs) == 0:
        # odd vertex count cannot have all degrees odd; isolated vertices
        # cannot reach degree 1
        return None

    order = sorted(range(n), key=lambda v: (-degs[v], v))
    pos = [0] * n
    for rank, v in enumerate(order):
        pos[v] = rank
    listed = set()
    edge_seq = []
    for v in order:
        for w in sorted(g.adj[v], key=lambda u: pos[u]):
            e = (v, w) if v < w else (w, v)
            if e not in listed:
                listed.add(e)
                edge_seq.append(e)

    chosen = [0] * n
    undecided = list(degs)
    take = [False] * m

    def feasible(v: int) -> bool:
        c = chosen[v]
        if c > b:
            return False
        lo = c if c > 1 else 1
        hi = c + undecided[v]
        if hi > b:
            hi = b
        if lo > hi:
            return False
        return lo % 2 == 1 or lo + 1 <= hi

    def dfs(i: int) -> bool:
        if i == m:
            return True
        u, w = edge_seq[i]
        undecided[u] -= 1
        undecided[w] -= 1
        chosen[u] += 1
        chosen[w] += 1
        take[i] = True
        if feasible(u) and feasible(w) and dfs(i + 1):
            return True
        chosen[u] -= 1
        chosen[w] -= 1
        take[i] = False
        if feasible(u) and feasible(w) and dfs(i + 1):
            return True
        undecided[u] += 1
        undecided[w] += 1
        return False

    if not dfs(0):
        return None
    picked = tuple(sorted(e for i, e in enumerate(edge_seq) if take[i]))
    final = [0] * n
    for u, w in picked:
        final[u] += 1
        final[w] += 1
    return FactorCertificate(edges=picked, degrees=tuple(final))


def verify_certificate(g: Graph, b: int, cert: FactorCertificate) -> CertificateCheck:
    """Recompute everything the certificate claims; never raises."""
    degrees = [0] * g.n
    seen = set()
    for e in cert.edges:
        u, v = e
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return CertificateCheck(False, f"duplicate edge {key}")
        seen.add(key)
        if key not in g._edge_set:
            return CertificateCheck(False, f"edge {key} not in the host graph")
        degrees[u] += 1
        degrees[v] += 1
    for v, d in enumerate(degrees):
        if d < 1:
            return CertificateCheck(False, f"vertex {v} has degree {d} < 1")
        if d % 2 == 0:
            return CertificateCheck(False, f"vertex {v} has even degree {d}")
        if d > b:
            return CertificateCheck(False, f"vertex {v} has degree {d} > {b}")
    return CertificateCheck(True)


def small_boundary_components(g: Graph, s, r: int, b: int) -> list:
    """Odd components of g-s whose edge boundary toward s is below ceil(r/b).

    Mechanical filter: no regularity assumption is made about g. Components
    are reported in original labels with their boundary sizes, ordered by
    smallest vertex.
    """
    if r < 1 or b < 1:
        raise ValueError(f"r and b must be positive, got r={r}, b={b}")
    s_t = as_vertex_set(s, g.n)
    ceil_rb = (r + b - 1) // b
    h, mapping = delete_vertices(g, s_t)
    back = {new: old for old, new in mapping.items()}
    out = []
    for comp in components(h):
        if len(comp) % 2 == 0:
            continue
        lifted = tuple(back[v] for v in comp)
        boundary = edge_boundary(g, lifted, s_t)
        if boundary < ceil_rb:
            out.append((lifted, boundary))
    return out
