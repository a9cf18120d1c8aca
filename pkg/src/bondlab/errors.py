"""Exception types shared across the package."""


class BondlabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdge(BondlabError):
    """An edge endpoint pair is not a valid simple-graph edge (e.g. a self-loop)."""


class IndexOutOfRange(BondlabError):
    """A vertex index falls outside 0..n-1."""


class SizeLimit(BondlabError):
    """The requested object exceeds a documented size cap."""


class EdgeNotFound(BondlabError):
    """An edge scheduled for removal does not exist in the graph."""


class ParseError(BondlabError):
    """Malformed graph6, edge-list, or embedding text."""


class InvalidRotation(BondlabError):
    """A rotation system violates its structural invariants."""


class RequiresConnected(BondlabError):
    """The operation is defined only for connected graphs."""


class BudgetExceeded(BondlabError):
    """An exhaustive search ran out of its trace budget.

    Carries the best result found before exhaustion so callers can opt
    into partial answers explicitly.
    """

    def __init__(self, message, best_genus=None, witness=None, traces=0):
        super().__init__(message)
        self.best_genus = best_genus
        self.witness = witness
        self.traces = traces


class NoEdges(BondlabError):
    """The operation needs at least one edge."""


class CapTooSmall(BondlabError):
    """No bondage witness exists within the caller-supplied subset-size cap."""


class SurfaceMismatch(BondlabError):
    """The supplied surface does not match the embedding's actual surface."""


class InvalidThreshold(BondlabError):
    """A case-inequality degree threshold is below its domain."""


class OutOfRegime(BondlabError):
    """A genus parameter lies outside the regime where a formula is stated."""


class InternalError(BondlabError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""
