"""Exact bondage number and the per-edge degree bounds that cap its search.

The search enumerates edge subsets in colexicographic order by
increasing size, deciding for each candidate whether the remaining graph
still has a dominating set of the original size. The default size cap is
the minimum over edges uv of d(u)+d(v)-1-|N(u)∩N(v)|, which always
admits a witness, so the default search cannot come back empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .domination import domination_number, exists_dominating_set_within, gamma_oracle
from .errors import CapTooSmall, InternalError, NoEdges, SizeLimit
from .graphs import Graph, common_neighbors, connected_components, degree_stats, induced_subgraph, remove_edges

ORACLE_MAX_EDGES = 20


@dataclass(frozen=True)
class HrBound:
    value: int
    arg_edge: tuple[int, int]


@dataclass(frozen=True)
class BondageResult:
    b: int
    witness: tuple[tuple[int, int], ...]
    base_gamma: int


def hr_bound(g: Graph) -> HrBound:
    """min over edges uv of d(u)+d(v)-1-|N(u)∩N(v)|, first edge wins ties."""
    best = None
    for u, v in g.edges():
        value = g.degree(u) + g.degree(v) - 1 - len(common_neighbors(g, u, v))
        if best is None or value < best.value:
            best = HrBound(value, (u, v))
    if best is None:
        raise NoEdges("hr_bound needs at least one edge")
    return best


def degree_bound(g: Graph) -> int:
    if g.edge_count() == 0:
        raise NoEdges("degree_bound needs at least one edge")
    dmin, dmax, _ = degree_stats(g)
    return dmin + dmax - 1


def colex_subsets(m: int, size: int):
    """Size-``size`` subsets of range(m) in colexicographic order."""
    if size == 0:
        yield ()
        return
    for last in range(size - 1, m):
        for rest in colex_subsets(last, size - 1):
            yield rest + (last,)


def _search_connected(g: Graph, cap: int):
    """Smallest colex edge subset (as index tuple) whose removal raises gamma."""
    base = domination_number(g).gamma
    edges = g.edges()
    m = len(edges)
    adj = g.adj
    for size in range(1, min(cap, m) + 1):
        for subset in colex_subsets(m, size):
            trimmed = list(adj)
            for idx in subset:
                u, v = edges[idx]
                trimmed[u] &= ~(1 << v)
                trimmed[v] &= ~(1 << u)
            if not exists_dominating_set_within(trimmed, g.n, base):
                return size, tuple(edges[idx] for idx in subset), base
    return None, (), base


def bondage_number(g: Graph, cap: int | None = None) -> BondageResult:
    """Exact b(G); disconnected graphs take the minimum over components."""
    if g.edge_count() == 0:
        raise NoEdges("bondage_number needs at least one edge")
    comps = connected_components(g)
    base_total = domination_number(g).gamma

    best: BondageResult | None = None
    for comp in comps:
        sub, back = induced_subgraph(g, comp)
        if sub.edge_count() == 0:
            continue
        comp_hr = hr_bound(sub).value
        comp_cap = comp_hr if cap is None else min(cap, comp_hr)
        if best is not None and comp_cap >= best.b:
            comp_cap = best.b - 1          # only a strict improvement matters
        if comp_cap < 1:
            continue
        size, witness, _ = _search_connected(sub, comp_cap)
        if size is not None and (best is None or size < best.b):
            mapped = tuple(
                (back[u], back[v]) if back[u] < back[v] else (back[v], back[u])
                for u, v in witness
            )
            best = BondageResult(size, mapped, base_total)
    if best is None:
        if cap is not None and cap < hr_bound(g).value:
            raise CapTooSmall(f"no bondage witness of size <= {cap}")
        raise InternalError("search within the Hartnell-Rall cap found no witness")
    return best


def bondage_oracle(g: Graph) -> int:
    """Plain unpruned subset enumeration with the subset-enumeration gamma."""
    m = g.edge_count()
    if m == 0:
        raise NoEdges("bondage_oracle needs at least one edge")
    if m > ORACLE_MAX_EDGES:
        raise SizeLimit(f"bondage_oracle capped at {ORACLE_MAX_EDGES} edges")
    base = gamma_oracle(g)
    edges = g.edges()
    for size in range(1, m + 1):
        for subset in combinations(edges, size):
            if gamma_oracle(remove_edges(g, subset)) > base:
                return size
    raise AssertionError("unreachable: deleting all edges always raises gamma")
