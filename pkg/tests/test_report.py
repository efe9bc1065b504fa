from klrspecht.report import Check, CheckCollector, Report


def test_report_summary_and_failures():
    rep = Report("demo", {"x": 1})
    rep.add("ok", True)
    rep.add("bad", False, "detail", {"where": 3})
    assert not rep.passed
    assert rep.first_failure().name == "bad"
    assert rep.summary() == "demo: FAIL (1 of 2)"
    data = rep.to_json()
    assert data["passed"] is False and len(data["checks"]) == 2


def test_collector_aggregates_instances():
    col = CheckCollector()
    for k in range(5):
        col.record("x", k != 3, {"k": k})
    col.record("y", True)
    checks = {c.name: c for c in col.checks()}
    assert not checks["x"].passed and checks["x"].witness == {"k": 3}
    assert "5" in checks["x"].detail
    assert checks["y"].passed


def test_merge_prefixes_names():
    a, b = Report("a"), Report("b")
    b.add("z", True)
    a.merge(b, prefix="b/")
    assert [c.name for c in a.checks] == ["b/z"]
    assert a.passed and a.summary() == "a: PASS"
    assert isinstance(a.checks[0], Check)
