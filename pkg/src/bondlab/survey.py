"""Corpus surveys: per-graph invariants with every applicable bound checked.

Each graph yields one row. Rows where a genus search ran out of budget
or the bondage cap was too small carry reason codes and are excluded
from pass/fail on the affected bounds, but the degree-based bounds are
still checked. Output order equals input order, so reports are
byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bondage import bondage_number, degree_bound, hr_bound
from .bounds import BoundSuite, bound_suite
from .domination import domination_number
from .embedding import GenusBudget, min_genus
from .errors import BudgetExceeded, CapTooSmall
from .graphs import Graph, degree_stats

CSV_HEADER = (
    "name,n,m,delta,Delta,gamma,bondage,hr,h,k,"
    "bound_orient,bound_nonorient,bound_planar,bound_best,ok"
)


@dataclass(frozen=True)
class SurveyRow:
    name: str
    n: int
    m: int
    delta_min: int
    delta_max: int
    gamma: int
    bondage: int | None
    hr: int | None
    genus_h: int | None
    genus_k: int | None
    bounds: BoundSuite | None
    ok: bool
    reasons: tuple[str, ...]

    def checked(self) -> bool:
        """True when the row contributed a real bound-vs-bondage check."""
        return self.bondage is not None and (self.bounds is not None or self.hr is not None)


def survey_graph(name: str, g: Graph, budget: GenusBudget, bondage_cap: int | None = None) -> SurveyRow:
    reasons: list[str] = []
    delta_min, delta_max, _ = degree_stats(g)
    m = g.edge_count()
    gamma = domination_number(g).gamma

    if m == 0:
        return SurveyRow(
            name, g.n, 0, delta_min, delta_max, gamma,
            bondage=None, hr=None, genus_h=0, genus_k=1, bounds=None,
            ok=True, reasons=("no-edges",),
        )

    hr = hr_bound(g).value
    try:
        bondage = bondage_number(g, cap=bondage_cap).b
    except CapTooSmall:
        bondage = None
        reasons.append("cap")

    genus_h = genus_k = None
    try:
        genus_h, _ = min_genus(g, orientable=True, budget=budget)
    except BudgetExceeded:
        reasons.append("budget-h")
    try:
        genus_k, _ = min_genus(g, orientable=False, budget=budget)
    except BudgetExceeded:
        reasons.append("budget-k")

    bounds = None
    if genus_h is not None and genus_k is not None:
        bounds = bound_suite(g, genus_h, genus_k)

    ok = True
    if bondage is not None:
        if bounds is not None:
            ok = all(bondage <= v for v in bounds.populated().values())
        else:
            ok = bondage <= hr and bondage <= degree_bound(g)
    return SurveyRow(
        name, g.n, m, delta_min, delta_max, gamma,
        bondage, hr, genus_h, genus_k, bounds, ok, tuple(reasons),
    )


def run_survey(named_graphs, budget: GenusBudget | None = None, bondage_cap: int | None = None):
    """Survey an iterable of (name, Graph); returns (rows, exit_status).

    Exit status 0 means every verifiable row passed; 1 means at least
    one bound was violated. Budget or cap exhaustion never fails a run.
    """
    if budget is None:
        budget = GenusBudget()
    rows = [survey_graph(name, g, budget, bondage_cap) for name, g in named_graphs]
    status = 0 if all(row.ok for row in rows) else 1
    return rows, status
