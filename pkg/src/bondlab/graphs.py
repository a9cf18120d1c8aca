"""Simple undirected graphs on at most 64 vertices with bit-vector adjacency.

Adjacency rows are plain Python ints used as bitmasks, so every
neighborhood operation is a couple of word operations. Graphs are
immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EdgeNotFound, IndexOutOfRange, InvalidEdge, SizeLimit

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not (1 <= self.n <= MAX_VERTICES):
            raise SizeLimit(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InvalidEdge("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise IndexOutOfRange(f"adjacency of {v} references vertex >= {self.n}")
            if row >> v & 1:
                raise InvalidEdge(f"self-loop at {v}")
        for v in range(self.n):
            for w in bits(self.adj[v]):
                if not self.adj[w] >> v & 1:
                    raise InvalidEdge(f"asymmetric adjacency {v},{w}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(rest):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(bin(row).count("1") for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int, edges, labels=None) -> Graph:
    """Build a simple graph; duplicate and reversed duplicate pairs collapse."""
    if n < 1:
        raise SizeLimit("need at least one vertex")
    if n > MAX_VERTICES:
        raise SizeLimit(f"vertex count {n} exceeds {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"self-loop ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """(min degree, max degree, non-increasing degree sequence)."""
    seq = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    return seq[-1], seq[0], seq


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    """N(u) ∩ N(v), never containing u or v themselves."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise InvalidEdge("common_neighbors needs two distinct vertices")
    mask = g.adj[u] & g.adj[v] & ~(1 << u) & ~(1 << v)
    return set(bits(mask))


def remove_edges(g: Graph, edge_set) -> Graph:
    """Same vertex set with the given edges deleted."""
    adj = list(g.adj)
    for u, v in edge_set:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise IndexOutOfRange(f"edge ({u},{v}) outside graph")
        if not adj[u] >> v & 1:
            raise EdgeNotFound(f"edge ({u},{v}) not present")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, listed by smallest contained index."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        frontier = 1 << start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` plus the old index of each new vertex."""
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return build_graph(len(order), edges), order
