import json

import pytest

from cdtgraphs.catalog import NAMES, expected_row
from cdtgraphs.verify import CLAIMS, SCHEMA_VERSION, Check, lkn_checks, thread_count, verify_all, verify_row

KNOWN_RED = {
    "table.kappa:pappus", "table.kappa:biggs-smith", "oac.fixture:pappus",
    "oac.solver-agrees:pappus", "embed.dual-chromatic:coxeter",
}


@pytest.fixture(scope="module")
def report():
    return verify_all()


def test_every_claim_is_registered(report):
    assert {c.claim for c in report.checks} <= set(CLAIMS)


def test_failures_are_exactly_the_documented_disagreements(report):
    assert {c.id for c in report.failures} == KNOWN_RED
    assert not report.passed


def test_large_hamiltonicity_skipped_without_slow(report):
    skipped = {c.id for c in report.checks if c.passed is None}
    assert skipped == {"table.h:foster", "table.h:biggs-smith"}


def test_deterministic_across_thread_counts():
    a = verify_all(threads=1).to_json()
    b = verify_all(threads=4).to_json()
    assert a == b


def test_json_schema(report):
    data = json.loads(report.to_json())
    assert data["schema"] == SCHEMA_VERSION
    assert set(data) == {"schema", "tool", "command", "passed", "summary", "checks"}
    ids = [c["id"] for c in data["checks"]]
    assert len(ids) == len(set(ids))
    assert data["summary"]["failed"] == len(KNOWN_RED)


def test_order_is_by_claim(report):
    claims = [c.claim for c in report.checks]
    assert claims == sorted(claims)


@pytest.mark.parametrize("name", NAMES)
def test_row_table_columns(name):
    row = verify_row(name)
    for col in ("n", "d", "g", "k", "eta", "a", "b"):
        c = next(c for c in row.checks if c.claim == f"table.{col}")
        assert c.passed and c.measured == getattr(expected_row(name), col)


def test_only_filter():
    rep = verify_all(only="desargues")
    assert {c.subject for c in rep.checks} == {"desargues"}
    assert rep.passed


def test_lkn_checks():
    checks = lkn_checks(6)
    assert checks and all(c.passed for c in checks)


def test_slow_fills_hamiltonicity():
    row = verify_row("foster", slow=True)
    h = next(c for c in row.checks if c.claim == "table.h")
    assert h.passed is True and h.measured is True


def test_thread_env(monkeypatch):
    monkeypatch.setenv("CDTGRAPHS_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("CDTGRAPHS_THREADS", "zero")
    assert thread_count() >= 1


def test_check_round_trip():
    c = Check("table.n", "k4", 4, 4, True, "")
    d = c.to_dict()
    assert d["id"] == "table.n:k4" and d["pass"] is True and "note" not in d
