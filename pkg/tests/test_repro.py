import json

from hessk3.cli import run_tags
from hessk3.repro import ALL_TAGS, CRITERIA, TASKS, Report, run_task


def test_registry():
    assert sorted(CRITERIA) == list(range(1, 16))
    assert all(tag in TASKS for tag in ALL_TAGS)
    assert len(set(ALL_TAGS)) == len(ALL_TAGS)


def test_pool_merge_is_deterministic():
    tags = ["cayley", "ns-gen", "a4-embedding", "x1n6"]
    serial = [json.dumps(r.to_json(timing=False), sort_keys=True) for r in run_tags(tags, 1)]
    pooled = [json.dumps(r.to_json(timing=False), sort_keys=True) for r in run_tags(tags, 3)]
    assert serial == pooled
    assert [json.loads(s)["task"] for s in pooled] == tags


def test_report_records_exceptions(monkeypatch):
    def boom(r):
        raise RuntimeError("kaboom")

    monkeypatch.setitem(TASKS, "ns-gen", boom)
    r = run_task("ns-gen")
    assert not r.passed and "kaboom" in r.error


def test_report_text():
    r = Report("demo")
    r.check("one", 1, 1)
    r.check("two", 2, 3)
    assert not r.passed
    text = r.to_text()
    assert text.startswith("== demo: FAIL")
    assert "[FAIL] two: expected 2, got 3" in text


def test_catalog_task_passes():
    assert run_task("catalog").passed
