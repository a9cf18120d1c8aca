"""Edge weights and curvatures of an embedded graph, in exact rationals.

Every edge uv of an embedded connected graph carries w = 1/d(u) + 1/d(v)
and f = 1/m1 + 1/m2, where m1 and m2 are the boundary walk lengths of
the faces on its two sides. The curvature adds the surface term:
w + f - 1 + (2h-2)/|E| on an orientable surface of genus h, and
w + f - 1 + (k-2)/|E| on a non-orientable surface of genus k. Summed
over all edges these reproduce |V|, |F|, and zero exactly.

The case evaluators parametrize the three-case counting argument that
rules out a counterexample to b(G) <= Delta + c: with minimum-degree
threshold s = c + 2,

  case A: one endpoint of degree exactly s      -> w <= 2/s,     f <= 1/2
  case B: one endpoint of degree exactly s + 1  -> w <= 2/(s+1), f <= 1/3 + 1/4
  case C: both endpoints of degree >= s + 2     -> w <= 2/(s+2), f <= 2/3

with edge-count floors s(s+1)/2, (s^2 + 2(s+1))/2, (s(s+1) + 2(s+2))/2.
improved_constant searches the smallest c making all three cases
negative, which is the best bound this argument certifies per genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .embedding import RotationSystem, embedding_summary, trace_faces, EmbeddingSummary
from .errors import InvalidThreshold, OutOfRegime, RequiresConnected, SurfaceMismatch
from .graphs import Graph, is_connected


@dataclass(frozen=True)
class SurfaceSpec:
    orientable: bool
    genus: int

    def __post_init__(self):
        if self.orientable and self.genus < 0:
            raise OutOfRegime("orientable genus must be >= 0")
        if not self.orientable and self.genus < 1:
            raise OutOfRegime("non-orientable genus must be >= 1")

    def genus_term(self) -> int:
        """Numerator t of the per-edge surface term t/|E|."""
        return 2 * self.genus - 2 if self.orientable else self.genus - 2


@dataclass(frozen=True)
class EdgeCurvature:
    edge: tuple[int, int]
    w: Fraction
    f: Fraction
    m1: int
    m2: int
    curvature: Fraction


@dataclass(frozen=True)
class CurvatureReport:
    per_edge: tuple[EdgeCurvature, ...]
    sum_w: Fraction
    sum_f: Fraction
    sum_curvature: Fraction


def curvature_table(g: Graph, rs: RotationSystem, surface: SurfaceSpec) -> CurvatureReport:
    """Per-edge exact-rational curvature records for one embedding."""
    if rs.graph is not g and rs.graph != g:
        raise SurfaceMismatch("rotation system does not belong to this graph")
    if not is_connected(g):
        raise RequiresConnected("curvature needs a connected graph")
    summary = embedding_summary(rs)
    if summary.orientable != surface.orientable or summary.genus != surface.genus:
        raise SurfaceMismatch(
            f"embedding lies on {'S' if summary.orientable else 'N'}_{summary.genus}, "
            f"not {'S' if surface.orientable else 'N'}_{surface.genus}"
        )
    faces = trace_faces(rs)
    m = g.edge_count()
    term = Fraction(surface.genus_term(), m)
    inv = {}

    def inverse(x):
        if x not in inv:
            inv[x] = Fraction(1, x)
        return inv[x]

    records = []
    sum_w = sum_f = sum_curv = Fraction(0)
    for u, v in g.edges():
        w = inverse(g.degree(u)) + inverse(g.degree(v))
        m1, m2 = faces.edge_side_lengths(u, v)
        f = inverse(m1) + inverse(m2)
        curv = w + f - 1 + term
        records.append(EdgeCurvature((u, v), w, f, m1, m2, curv))
        sum_w += w
        sum_f += f
        sum_curv += curv
    return CurvatureReport(tuple(records), sum_w, sum_f, sum_curv)


def check_euler_identities(report: CurvatureReport, summary: EmbeddingSummary) -> bool:
    """True iff sum w = |V|, sum f = |F|, and sum curvature = 0, exactly."""
    return (
        report.sum_w == summary.v
        and report.sum_f == summary.f
        and report.sum_curvature == 0
    )


# ---------------------------------------------------------------------------
# case inequalities

CASES = ("A", "B", "C")


@dataclass(frozen=True)
class CaseBound:
    case: str
    s: int
    t: int
    base: Fraction
    edge_floor: Fraction
    value: Fraction


def _case_base(case: str, s: int) -> Fraction:
    if case == "A":
        return Fraction(2, s) - Fraction(1, 2)
    if case == "B":
        return Fraction(2, s + 1) - Fraction(5, 12)
    if case == "C":
        return Fraction(2, s + 2) - Fraction(1, 3)
    raise InvalidThreshold(f"unknown case {case!r}")


def _case_edge_floor(case: str, s: int) -> Fraction:
    if case == "A":
        return Fraction(s * (s + 1), 2)
    if case == "B":
        return Fraction(s * s + 2 * (s + 1), 2)
    if case == "C":
        return Fraction(s * (s + 1) + 2 * (s + 2), 2)
    raise InvalidThreshold(f"unknown case {case!r}")


def case_bound(case: str, s: int, t: int) -> CaseBound:
    """Worst-case curvature of a case edge at degree threshold s, genus term t."""
    if s < 3:
        raise InvalidThreshold(f"degree threshold {s} below 3")
    base = _case_base(case, s)
    floor = _case_edge_floor(case, s)
    return CaseBound(case, s, t, base, floor, base + Fraction(t) / floor)


def paper_case_formulas(surface: SurfaceSpec) -> tuple[Fraction, Fraction, Fraction]:
    """The three closed-form case values, in the regimes where they hold."""
    if surface.orientable:
        h = surface.genus
        if h < 1:
            raise OutOfRegime("orientable closed forms require genus >= 1")
        return (
            Fraction(-8 + h * (3 - h), 2 * (h + 4) * (h + 5)),
            Fraction(
                -5 * h**3 - 3 * h**2 + 52 * h - 266,
                12 * (h + 5) * (h**2 + 10 * h + 26),
            ),
            Fraction(
                -(h**3) + h**2 + 28 * h - 72,
                3 * (h + 6) * (h**2 + 11 * h + 32),
            ),
        )
    k = surface.genus
    if k < 2:
        raise OutOfRegime("non-orientable closed forms require genus >= 2")
    return (
        Fraction(-4 + k * (1 - k), 2 * (k + 3) * (k + 4)),
        Fraction(
            -124 - 5 * k - 12 * k**2 - 5 * k**3,
            12 * (k + 4) * (k**2 + 8 * k + 17),
        ),
        Fraction(
            -(k**3) - 2 * k**2 + 5 * k - 38,
            3 * (k + 5) * (k**2 + 9 * k + 22),
        ),
    )


def _all_cases_negative(s: int, t: int) -> bool:
    """Every case edge is forced to negative curvature at threshold s."""
    for case in CASES:
        cb = case_bound(case, s, t)
        if t > 0:
            if cb.value >= 0:
                return False
        elif t == 0:
            if cb.base >= 0:
                return False
        else:
            # the strictly negative t/|E| term supplies strictness
            if cb.base > 0:
                return False
    return True


def improved_constant(orientable: bool, genus: int) -> int:
    """Smallest c for which the three-case argument yields b(G) <= Delta + c.

    Feasibility is monotone in c: the case bases decrease with the
    threshold s = c + 2 while the edge floors grow, so the first feasible
    c is minimal and the upward search always terminates.
    """
    surface = SurfaceSpec(orientable, genus)   # validates the genus range
    t = surface.genus_term()
    c = 1
    while True:
        if _all_cases_negative(c + 2, t):
            return c
        c += 1
