"""Exception types shared across the package."""


class TrifreeError(Exception):
    """Base class for all package errors."""


class InvalidGraph(TrifreeError):
    """Adjacency data violates the graph invariants."""


class OrderTooLarge(TrifreeError):
    """Requested graph order exceeds the build cap."""


class PatternTooLarge(TrifreeError):
    """Pattern has more vertices than the graph it is tested against."""


class MalformedInput(TrifreeError):
    """Unparseable external data (graph6 line, ledger record, spec string)."""


class NotTriangleFree(TrifreeError):
    """An operation required a triangle-free input and did not get one."""


class ResourceLimit(TrifreeError):
    """A search exceeded its node or time budget.

    Carries whatever partial result information the caller attached; search
    entry points normally report incompleteness through result flags instead
    of raising, so this surfaces only from low-level drivers.
    """


class MissingTableEntry(TrifreeError):
    """An edge-bound lookup had no entry and no fallback was allowed."""

    def __init__(self, k: int, n: int):
        super().__init__(f"no edge bound recorded for pattern size {k}, order {n}")
        self.k = k
        self.n = n


class ExactConflict(TrifreeError):
    """Two irreconcilable exact bounds for the same table cell."""


class MissingCensus(TrifreeError):
    """A consistency check needed a census that was not supplied."""
