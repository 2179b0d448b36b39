import pytest

from claguerre.verify import (
    SUITES,
    SuiteResult,
    VerifyReport,
    classical_laguerre,
    run_suites,
    scope_names,
)


def test_scope_names_cover_every_module():
    assert scope_names() == ("all", "alpha_calc", "laguerre", "laplace",
                             "integrate", "cli")


def test_unknown_scope_raises():
    with pytest.raises(ValueError):
        run_suites("nope")


def test_single_scope_runs_only_its_suites():
    report = run_suites("alpha_calc")
    assert len(report.entries) == len(SUITES["alpha_calc"])
    assert all(e.name.startswith("alpha_calc/") for e in report.entries)
    assert report.all_passed
    assert report.exit_code == 0


def test_failures_become_entries_not_crashes(monkeypatch):
    def boom():
        raise RuntimeError("exploded")

    def miss():
        assert False, "identity moved"

    monkeypatch.setitem(SUITES, "cli", (("boom", boom), ("miss", miss)))
    report = run_suites("cli")
    assert [e.passed for e in report.entries] == [False, False]
    assert "RuntimeError" in report.entries[0].detail
    assert "identity moved" in report.entries[1].detail
    assert report.exit_code == 1


def test_report_exit_code_reflects_entries():
    good = VerifyReport((SuiteResult("a/b", True, "ok"),))
    bad = VerifyReport((SuiteResult("a/b", True, "ok"),
                        SuiteResult("a/c", False, "off")))
    assert good.exit_code == 0 and good.all_passed
    assert bad.exit_code == 1 and not bad.all_passed


def test_classical_recurrence_small_values():
    # L_2(x) = 1 - 2x + x^2/2 and L_1^1(x) = 2 - x, directly
    assert classical_laguerre(2, 0, 1.0) == pytest.approx(-0.5)
    assert classical_laguerre(1, 1, 0.0) == pytest.approx(2.0)
