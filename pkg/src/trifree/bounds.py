"""Persistent ledger of minimum-edge-count bounds.

A cell (K, n) holds the best known bound on e(3, J_K, n): the minimum edge
count of a triangle-free order-n graph without J_K in the complement, or
"infinite" when no such graph exists.  Merging never weakens a cell, rows
are monotone in n, infinity is upward closed, and orders below K have the
built-in exact value 0 (the empty graph qualifies).

Ledger file format: one record per line,

    K,n,kind,value,provenance,note

comma separated, kind in {exact, atleast, infinite} (value empty for
infinite), '#' starts a comment, export sorts by (K, n).  The note field
is last and may itself contain commas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExactConflict, MalformedInput, MissingTableEntry

EXACT = "exact"
AT_LEAST = "atleast"
INFINITE_KIND = "infinite"


@dataclass(frozen=True)
class Bound:
    kind: str
    value: int | None
    provenance: str = "imported"
    note: str = ""

    def __post_init__(self):
        if self.kind not in (EXACT, AT_LEAST, INFINITE_KIND):
            raise MalformedInput(f"unknown bound kind {self.kind!r}")
        if self.kind == INFINITE_KIND:
            if self.value is not None:
                raise MalformedInput("infinite bound carries no value")
        elif self.value is None or self.value < 0:
            raise MalformedInput("bound value must be a nonnegative integer")

    @classmethod
    def exact(cls, value: int, provenance: str = "imported", note: str = "") -> "Bound":
        return cls(EXACT, value, provenance, note)

    @classmethod
    def at_least(cls, value: int, provenance: str = "imported", note: str = "") -> "Bound":
        return cls(AT_LEAST, value, provenance, note)

    @classmethod
    def infinite(cls, provenance: str = "imported", note: str = "") -> "Bound":
        return cls(INFINITE_KIND, None, provenance, note)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    @property
    def is_infinite(self) -> bool:
        return self.kind == INFINITE_KIND

    def lower_value(self) -> int | None:
        """Lower bound as an integer; None encodes infinity."""
        return None if self.is_infinite else self.value

    def __str__(self):
        if self.is_infinite:
            return "infinite"
        return f"{'=' if self.is_exact else '>='}{self.value}"


def merge_bounds(old: Bound | None, new: Bound) -> Bound:
    """Strongest-wins merge; irreconcilable exact information is an error."""
    if old is None:
        return new
    if old.is_infinite and new.is_infinite:
        return old
    if old.is_infinite or new.is_infinite:
        fin = new if old.is_infinite else old
        if fin.is_exact:
            raise ExactConflict(f"exact {fin} vs infinite")
        return old if old.is_infinite else new
    if old.is_exact and new.is_exact:
        if old.value != new.value:
            raise ExactConflict(f"exact {old.value} vs exact {new.value}")
        return old
    if old.is_exact:
        if new.value > old.value:
            raise ExactConflict(f"lower bound {new.value} above exact {old.value}")
        return old
    if new.is_exact:
        if old.value > new.value:
            raise ExactConflict(f"lower bound {old.value} above exact {new.value}")
        return new
    return old if old.value >= new.value else new


class BoundTable:
    """Mutable map (pattern size K, order n) -> Bound."""

    def __init__(self):
        self.cells: dict = {}

    def get_bound(self, k: int, n: int) -> Bound | None:
        """Stored bound, the built-in Exact(0) for n < K, the upward
        closure of infinity, or None when the cell is genuinely unknown."""
        b = self.cells.get((k, n))
        if b is not None:
            return b
        if n <= k - 1:
            return Bound.exact(0, "closed_form", "order below pattern size")
        inf_from = self.first_infinite(k)
        if inf_from is not None and n >= inf_from:
            return Bound.infinite("imported", f"upward closure from n={inf_from}")
        return None

    def merge_bound(self, k: int, n: int, b: Bound) -> Bound:
        merged = merge_bounds(self.cells.get((k, n)), b)
        self.cells[(k, n)] = merged
        return merged

    def first_infinite(self, k: int) -> int | None:
        candidates = [n for (kk, n), b in self.cells.items() if kk == k and b.is_infinite]
        return min(candidates, default=None)

    def row(self, k: int) -> dict:
        return {n: b for (kk, n), b in sorted(self.cells.items()) if kk == k}

    def validate_monotone(self):
        """Finite bound values must be nondecreasing in n for fixed K, and
        nothing finite may sit above the first infinity."""
        by_k: dict = {}
        for (k, n), b in self.cells.items():
            by_k.setdefault(k, []).append((n, b))
        for k, row in by_k.items():
            row.sort()
            prev_value = -1
            inf_seen = None
            for n, b in row:
                if b.is_infinite:
                    inf_seen = n if inf_seen is None else inf_seen
                    continue
                if inf_seen is not None:
                    raise ExactConflict(
                        f"finite bound at ({k},{n}) above infinity at ({k},{inf_seen})")
                if b.value < prev_value:
                    raise ExactConflict(f"bound at ({k},{n}) below its predecessor")
                prev_value = b.value
        return True


class TableView:
    """Lower-bound lookups for one pattern size, as the feasibility
    arithmetic consumes them.

    Unknown cells raise MissingTableEntry unless closed-form fallback was
    requested explicitly; fallback use is recorded in `fallbacks`.
    """

    def __init__(self, table: BoundTable, allow_closed_form: bool = False):
        self.table = table
        self.allow_closed_form = allow_closed_form
        self.fallbacks: list = []

    def lower(self, k: int, n: int):
        """Lower bound for e(3, J_k, n); None encodes infinity."""
        b = self.table.get_bound(k, n)
        if b is not None:
            return b.lower_value()
        if self.allow_closed_form:
            from .feasibility import closed_form_bound

            cf = closed_form_bound(k, n)
            if cf is not None:
                self.fallbacks.append((k, n, cf))
                return cf.lower_value()
        raise MissingTableEntry(k, n)


def propagate(table: BoundTable, k: int, n_lo: int, n_hi: int,
              refine: bool = True, allow_closed_form: bool = False,
              stop_after_infinite: bool = True) -> list:
    """Merge feasibility bounds for row K over [n_lo, n_hi], reading row
    K-1 through a view.  Returns [(n, merged bound)] in order.

    Row K depends only on row K-1, so one ascending pass reaches the
    fixpoint; infinity at some n upward-closes the rest of the row.
    """
    from .feasibility import min_edges_bound

    view = TableView(table, allow_closed_form)
    out = []
    for n in range(n_lo, n_hi + 1):
        b = min_edges_bound(k, n, view, refine=refine)
        merged = table.merge_bound(k, n, b)
        out.append((n, merged))
        if b.is_infinite and stop_after_infinite:
            break
    return out


def ramsey_upper_bound(table: BoundTable, k: int) -> int | None:
    """Least order recorded infeasible: R(3, J_K) <= that order."""
    return table.first_infinite(k)


# ---------------------------------------------------------------------------
# Ledger file format


def format_ledger(table: BoundTable) -> str:
    lines = ["# K,n,kind,value,provenance,note"]
    for (k, n), b in sorted(table.cells.items()):
        value = "" if b.value is None else str(b.value)
        lines.append(f"{k},{n},{b.kind},{value},{b.provenance},{b.note}")
    return "\n".join(lines) + "\n"


def parse_ledger(text: str, table: BoundTable | None = None) -> BoundTable:
    table = table or BoundTable()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",", 5)
        if len(parts) < 5:
            raise MalformedInput(f"ledger line {lineno}: expected 6 fields, got {len(parts)}")
        if len(parts) == 5:
            parts.append("")
        k_s, n_s, kind, value_s, provenance, note = parts
        try:
            k, n = int(k_s), int(n_s)
            value = int(value_s) if value_s.strip() else None
        except ValueError as exc:
            raise MalformedInput(f"ledger line {lineno}: {exc}") from exc
        table.merge_bound(k, n, Bound(kind.strip(), value, provenance.strip(), note.strip()))
    return table


def write_ledger(path, table: BoundTable):
    with open(path, "w") as fh:
        fh.write(format_ledger(table))


def read_ledger(path, table: BoundTable | None = None) -> BoundTable:
    with open(path) as fh:
        return parse_ledger(fh.read(), table)


def format_grid(table: BoundTable, k_lo: int, k_hi: int, n_lo: int, n_hi: int) -> str:
    """Human-readable grid, orders down the side and pattern sizes across."""
    ks = list(range(k_lo, k_hi + 1))
    header = ["n\\K"] + [str(k) for k in ks]
    rows = [header]
    for n in range(n_lo, n_hi + 1):
        row = [str(n)]
        for k in ks:
            b = table.get_bound(k, n)
            if b is None:
                row.append(".")
            elif b.is_infinite:
                row.append("inf")
            else:
                row.append(("" if b.is_exact else ">=") + str(b.value))
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    return "\n".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows) + "\n"
