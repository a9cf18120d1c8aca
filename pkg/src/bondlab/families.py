"""Deterministic graph-family generators.

The rook family is the Cartesian product of two complete graphs: the
vertices are ordered pairs, adjacent iff they agree in exactly one
coordinate. gnp draws edge slots in column-major order from a
splitmix64 stream, so the same (n, a, b, seed) always yields the same
graph in any implementation of this scheme.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidEdge, SizeLimit
from .graphs import MAX_VERTICES, Graph, build_graph

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "wheel",
    "rook",
    "hypercube",
    "gnp",
)

_M64 = (1 << 64) - 1


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    seed: int | None = None


def _splitmix64(state: int):
    """One step of the splitmix64 generator; returns (value, next_state)."""
    state = (state + 0x9E3779B97F4A7C15) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31), state


def gnp(n: int, a: int, b: int, seed: int) -> Graph:
    """Seeded random graph with edge probability a/b over column-major slots."""
    if not (0 <= a <= b and b >= 1):
        raise InvalidEdge(f"probability {a}/{b} outside [0, 1]")
    state = seed & _M64
    threshold = (a << 64) // b
    edges = []
    for j in range(1, n):
        for i in range(j):
            value, state = _splitmix64(state)
            if value < threshold:
                edges.append((i, j))
    return build_graph(n, edges)


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidEdge(f"cycle needs >= 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for j in range(n) for i in range(j)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 is the center."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(rim: int) -> Graph:
    """Hub vertex 0 joined to the cycle 1..rim."""
    if rim < 3:
        raise InvalidEdge(f"wheel needs rim >= 3, got {rim}")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def rook(n: int) -> Graph:
    """Cartesian product of two K_n's; vertex (i, j) has index i*n + j."""
    if n < 1:
        raise InvalidEdge(f"rook needs n >= 1, got {n}")
    if n * n > MAX_VERTICES:
        raise SizeLimit(f"rook({n}) has {n * n} vertices")
    edges = []
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                edges.append((i * n + j, i * n + k))   # same row
                edges.append((j * n + i, k * n + i))   # same column
    return build_graph(n * n, edges)


def hypercube(dim: int) -> Graph:
    if dim < 0 or 1 << dim > MAX_VERTICES:
        raise SizeLimit(f"hypercube({dim}) out of range")
    n = 1 << dim
    edges = [(v, v ^ (1 << d)) for v in range(n) for d in range(dim) if v < v ^ (1 << d)]
    return build_graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec."""
    fam, p = spec.family, spec.params
    if fam == "path":
        return path(*p)
    if fam == "cycle":
        return cycle(*p)
    if fam == "complete":
        return complete(*p)
    if fam == "complete_bipartite":
        return complete_bipartite(*p)
    if fam == "star":
        return star(*p)
    if fam == "wheel":
        return wheel(*p)
    if fam == "rook":
        return rook(*p)
    if fam == "hypercube":
        return hypercube(*p)
    if fam == "gnp":
        if spec.seed is None:
            raise InvalidEdge("gnp requires a seed")
        return gnp(p[0], p[1], p[2], spec.seed)
    raise InvalidEdge(f"unknown family {fam!r}")
