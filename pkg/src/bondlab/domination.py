"""Exact domination number via branch-and-bound over bit-vector neighborhoods.

The solver branches on the closed neighborhood of an undominated vertex
of minimum closed-neighborhood size, with a greedy max-coverage pass for
the initial upper bound and ceil(undominated / (max degree + 1)) as the
admissible lower bound. All tie-breaks take the smallest vertex index,
so the reported witness is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import IndexOutOfRange, SizeLimit
from .graphs import Graph, bits, connected_components, induced_subgraph

ORACLE_MAX_VERTICES = 20


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: tuple[int, ...]


def is_dominating_set(g: Graph, vertex_set) -> bool:
    """True iff every vertex outside the set has a neighbor inside it."""
    covered = 0
    for v in vertex_set:
        if not (0 <= v < g.n):
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
        covered |= g.adj[v] | (1 << v)
    return covered == (1 << g.n) - 1


def _closed(adj, n):
    return [adj[v] | (1 << v) for v in range(n)]


def _greedy_upper(closed, n):
    """Greedy max-coverage dominating set; smallest index wins ties."""
    full = (1 << n) - 1
    undom = full
    picked = []
    while undom:
        best_v, best_gain = -1, -1
        for v in range(n):
            gain = bin(closed[v] & undom).count("1")
            if gain > best_gain:
                best_v, best_gain = v, gain
        picked.append(best_v)
        undom &= ~closed[best_v]
    return picked


def _solve_connected(adj, n):
    closed = _closed(adj, n)
    order = sorted(range(n), key=lambda v: (bin(closed[v]).count("1"), v))
    max_closed = max(bin(c).count("1") for c in closed)
    full = (1 << n) - 1

    best = _greedy_upper(closed, n)
    best_size = len(best)

    chosen = []

    def search(undom, depth):
        nonlocal best, best_size
        if not undom:
            if depth < best_size:
                best = list(chosen)
                best_size = depth
            return
        # admissible lower bound: one pick covers at most Delta+1 vertices
        need = -(-bin(undom).count("1") // max_closed)
        if depth + need >= best_size:
            return
        for v in order:
            if undom >> v & 1:
                branch_vertex = v
                break
        for w in sorted(bits(closed[branch_vertex])):
            chosen.append(w)
            search(undom & ~closed[w], depth + 1)
            chosen.pop()

    search(full, 0)
    return best_size, sorted(best)


def domination_number(g: Graph) -> DominationResult:
    """Exact gamma(G) with a minimum witness; sums over components."""
    comps = connected_components(g)
    if len(comps) == 1:
        size, witness = _solve_connected(g.adj, g.n)
        return DominationResult(size, tuple(witness))
    total = 0
    witness: list[int] = []
    for comp in comps:
        sub, back = induced_subgraph(g, comp)
        size, local = _solve_connected(sub.adj, sub.n)
        total += size
        witness.extend(back[v] for v in local)
    return DominationResult(total, tuple(sorted(witness)))


def exists_dominating_set_within(adj, n: int, limit: int) -> bool:
    """Decide whether some dominating set of size <= limit exists.

    Decision variant used by the bondage search: stops at the first
    witness instead of proving optimality.
    """
    if limit <= 0:
        return False
    closed = _closed(adj, n)
    order = sorted(range(n), key=lambda v: (bin(closed[v]).count("1"), v))
    max_closed = max(bin(c).count("1") for c in closed)
    full = (1 << n) - 1

    def search(undom, remaining):
        if not undom:
            return True
        count = bin(undom).count("1")
        if -(-count // max_closed) > remaining:
            return False
        for v in order:
            if undom >> v & 1:
                branch_vertex = v
                break
        for w in bits(closed[branch_vertex]):
            if search(undom & ~closed[w], remaining - 1):
                return True
        return False

    return search(full, limit)


def gamma_oracle(g: Graph) -> int:
    """gamma(G) by enumerating vertex subsets in increasing size; n <= 20."""
    if g.n > ORACLE_MAX_VERTICES:
        raise SizeLimit(f"gamma_oracle capped at {ORACLE_MAX_VERTICES} vertices")
    closed = _closed(g.adj, g.n)
    full = (1 << g.n) - 1
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return size
    raise AssertionError("unreachable: V(G) always dominates")
