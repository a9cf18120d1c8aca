"""Upper-bound calculators for the bondage number and their aggregator.

All floors are computed with integer square roots, so the degree caps
are exact at any genus. Bounds whose regime excludes the graph are None
rather than sentinel values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .bondage import degree_bound, hr_bound
from .curvature import improved_constant
from .errors import NoEdges, OutOfRegime
from .graphs import Graph, degree_stats


@dataclass(frozen=True)
class SachsBounds:
    """Degree caps and the bondage caps they imply through the edge lemma.

    The orientable pair needs genus >= 1 and the non-orientable degree
    cap needs genus >= 2; a projective-planar graph (genus 1) instead
    satisfies the flat cap minimum degree <= 5, which is why its bondage
    cap is still defined.
    """

    delta_cap_orientable: int | None
    delta_cap_nonorientable: int | None
    b_cap_orientable: int | None
    b_cap_nonorientable: int | None


def sachs_bounds(delta_max: int, h: int | None = None, k: int | None = None) -> SachsBounds:
    if h is not None and h < 0:
        raise OutOfRegime(f"orientable genus {h} < 0")
    if k is not None and k < 1:
        raise OutOfRegime(f"non-orientable genus {k} < 1")
    delta_o = b_o = delta_n = b_n = None
    if h is not None and h >= 1:
        root = isqrt(1 + 48 * h)
        delta_o = (5 + root) // 2
        b_o = delta_max + (3 + root) // 2
    if k is not None:
        root = isqrt(1 + 24 * k)
        if k >= 2:
            delta_n = (5 + root) // 2
        b_n = delta_max + (3 + root) // 2
    return SachsBounds(delta_o, delta_n, b_o, b_n)


def surface_bounds(delta_max: int, h: int, k: int) -> tuple[int, int]:
    """(Delta + h + 2, Delta + k + 1)."""
    if delta_max < 1:
        raise NoEdges("surface bounds need a positive maximum degree")
    if h < 0 or k < 1:
        raise OutOfRegime(f"genera (h={h}, k={k}) out of range")
    return delta_max + h + 2, delta_max + k + 1


@dataclass(frozen=True)
class BoundSuite:
    hr: int
    degree: int
    planar: int | None
    toroidal: int | None
    orientable_surface: int
    nonorientable_surface: int
    sachs_orientable: int | None
    sachs_nonorientable: int | None
    improved_orientable: int
    improved_nonorientable: int
    best: int

    def populated(self) -> dict[str, int]:
        fields = (
            "hr", "degree", "planar", "toroidal", "orientable_surface",
            "nonorientable_surface", "sachs_orientable", "sachs_nonorientable",
            "improved_orientable", "improved_nonorientable",
        )
        return {name: v for name in fields if (v := getattr(self, name)) is not None}


def bound_suite(g: Graph, h: int, k: int) -> BoundSuite:
    """Every applicable bound for a graph with known genera; best = minimum."""
    if g.edge_count() == 0:
        raise NoEdges("bound suite needs at least one edge")
    _, delta_max, _ = degree_stats(g)
    orient, nonorient = surface_bounds(delta_max, h, k)
    sachs = sachs_bounds(delta_max, h, k)
    values = dict(
        hr=hr_bound(g).value,
        degree=degree_bound(g),
        planar=min(8, delta_max + 2) if h == 0 else None,
        toroidal=delta_max + 3 if h <= 1 else None,
        orientable_surface=orient,
        nonorientable_surface=nonorient,
        sachs_orientable=sachs.b_cap_orientable,
        sachs_nonorientable=sachs.b_cap_nonorientable,
        improved_orientable=delta_max + improved_constant(True, h),
        improved_nonorientable=delta_max + improved_constant(False, k),
    )
    best = min(v for v in values.values() if v is not None)
    return BoundSuite(best=best, **values)
