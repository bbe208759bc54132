import glob
import os

import pytest

from trifree.bounds import (
    Bound,
    BoundTable,
    TableView,
    format_grid,
    format_ledger,
    merge_bounds,
    parse_ledger,
    propagate,
    ramsey_upper_bound,
    read_ledger,
    write_ledger,
)
from trifree.errors import ExactConflict, MalformedInput

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "trifree", "data")


def shipped_table():
    t = BoundTable()
    for path in sorted(glob.glob(os.path.join(DATA, "*.ledger"))):
        read_ledger(path, t)
    return t


def test_merge_never_weakens():
    exact = Bound.exact(52)
    assert merge_bounds(exact, Bound.at_least(50)) == exact
    assert merge_bounds(Bound.at_least(50), exact) == exact
    assert merge_bounds(Bound.at_least(10), Bound.at_least(20)).value == 20
    assert merge_bounds(Bound.at_least(20), Bound.at_least(10)).value == 20
    assert merge_bounds(Bound.at_least(10), Bound.infinite()).is_infinite
    assert merge_bounds(Bound.infinite(), Bound.at_least(10)).is_infinite


def test_merge_conflicts():
    with pytest.raises(ExactConflict):
        merge_bounds(Bound.exact(52), Bound.exact(53))
    with pytest.raises(ExactConflict):
        merge_bounds(Bound.exact(52), Bound.at_least(53))
    with pytest.raises(ExactConflict):
        merge_bounds(Bound.exact(52), Bound.infinite())


def test_get_bound_defaults():
    t = BoundTable()
    assert t.get_bound(10, 9).value == 0       # below pattern size
    assert t.get_bound(10, 20) is None
    t.merge_bound(10, 37, Bound.infinite())
    assert t.get_bound(10, 40).is_infinite     # upward closure
    assert t.get_bound(10, 36) is None


def test_shipped_table_spot_values():
    t = shipped_table()
    assert t.get_bound(10, 36) == Bound.exact(156, "imported", "maximum 162")
    assert t.get_bound(5, 10).value == 15
    assert t.get_bound(13, 40).value == 100 and not t.get_bound(13, 40).is_exact
    t.validate_monotone()


def test_ramsey_upper_bounds_from_shipped():
    t = shipped_table()
    for k, upper in {3: 5, 4: 7, 5: 11, 6: 17, 7: 21, 8: 25, 9: 31,
                     10: 37, 11: 45, 12: 53, 13: 62, 14: 71, 15: 80}.items():
        assert ramsey_upper_bound(t, k) == upper
    assert ramsey_upper_bound(t, 16) is None  # needs the final feasibility step


def test_ledger_round_trip(tmp_path):
    t = shipped_table()
    path = tmp_path / "all.ledger"
    write_ledger(path, t)
    back = read_ledger(path)
    assert back.cells == t.cells
    # byte-identical re-export
    assert format_ledger(back) == format_ledger(t)


def test_ledger_notes_with_commas():
    text = "12,48,atleast,222,imported,unique histogram, with a comma\n"
    t = parse_ledger(text)
    assert t.get_bound(12, 48).note == "unique histogram, with a comma"


def test_ledger_malformed():
    with pytest.raises(MalformedInput):
        parse_ledger("12,48\n")
    with pytest.raises(MalformedInput):
        parse_ledger("12,xx,atleast,5,imported,\n")
    with pytest.raises(MalformedInput):
        parse_ledger("12,48,sometimes,5,imported,\n")


def test_validate_monotone_catches_dips():
    t = BoundTable()
    t.merge_bound(9, 20, Bound.exact(30))
    t.merge_bound(9, 21, Bound.exact(29))
    with pytest.raises(ExactConflict):
        t.validate_monotone()
    t2 = BoundTable()
    t2.merge_bound(9, 20, Bound.infinite())
    t2.merge_bound(9, 21, Bound.exact(29))
    with pytest.raises(ExactConflict):
        t2.validate_monotone()


def test_propagate_soundness_small(j5_builder, j4_builder):
    # propagated lower bounds never exceed enumerated exact values
    from trifree.enumeration import enumerate_min_edges
    from trifree.patterns import Pattern

    t = BoundTable()
    for m in range(1, 11):
        r = enumerate_min_edges(Pattern.j(4), m, builder=j4_builder)
        t.merge_bound(4, m, Bound.infinite("enumerated") if r.infinite
                      else Bound.exact(r.value, "enumerated"))
    results = propagate(t, 5, 5, 12)
    for n, b in results:
        r = enumerate_min_edges(Pattern.j(5), n, builder=j5_builder)
        if b.is_infinite:
            assert r.infinite, n
        elif not r.infinite:
            assert b.value <= r.value, n
    # the arithmetic alone cannot rule out a 4-regular order-11 graph, so
    # it proves infeasibility one order after the true Ramsey bound
    assert ramsey_upper_bound(t, 5) == 12


def test_propagate_reproduces_shipped_row_12():
    t = BoundTable()
    read_ledger(os.path.join(DATA, "exact_small.ledger"), t)
    read_ledger(os.path.join(DATA, "j11_bounds.ledger"), t)
    shipped = shipped_table()
    for n, b in propagate(t, 12, 34, 53):
        want = shipped.get_bound(12, n)
        if want.is_infinite:
            assert b.is_infinite
        else:
            assert b.value == want.value, n


def test_grid_rendering():
    t = shipped_table()
    text = format_grid(t, 4, 6, 5, 11)
    assert "inf" in text
    lines = text.splitlines()
    assert lines[0].split() == ["n\\K", "4", "5", "6"]
    assert len(lines) == 8
