"""The report container: recording, rendering, aggregation."""

from morita import Report


def test_record_and_counts():
    rep = Report(title="demo")
    assert rep.record("law.a", "x", True) is True
    assert rep.record("law.b", "y", False, detail="because") is False
    assert rep.counts() == (1, 1)
    assert not rep.ok
    assert rep.first_failure().law == "law.b"
    assert len(rep) == 2


def test_check_equal_keeps_counterexample_only_on_failure():
    rep = Report()
    rep.check_equal("law.eq", "good", 3, 3)
    rep.check_equal("law.eq", "bad", 3, 4)
    good, bad = rep.entries
    assert good.lhs is None and good.rhs is None
    assert bad.lhs == 3 and bad.rhs == 4


def test_extend_and_iteration():
    a = Report()
    a.record("one", "s", True)
    b = Report()
    b.record("two", "t", False)
    a.extend(b)
    assert [e.law for e in a] == ["one", "two"]
    assert a.failures()[0].law == "two"


def test_render_modes():
    rep = Report(title="head")
    rep.record("law.a", "x", True)
    rep.record("law.b", "y", False, lhs=1, rhs=2)
    full = rep.render()
    assert full.splitlines()[0] == "head"
    assert "[ok  ] law.a" in full
    assert "[FAIL] law.b" in full
    assert "lhs = 1" in full
    assert full.rstrip().endswith("1 passed, 1 failed")
    brief = rep.render(only_failures=True)
    assert "law.a" not in brief and "law.b" in brief


def test_empty_report_is_ok():
    rep = Report()
    assert rep.ok and rep.counts() == (0, 0) and rep.first_failure() is None
