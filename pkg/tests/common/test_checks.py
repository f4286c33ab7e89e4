import pytest
from pydantic import ValidationError

from billiardlab.common import CheckResult, CheckStatus, CrossCheckReport


def test_relative_check():
    check = CheckResult(name="energy", expected=100.0, observed=100.5, tolerance=1e-2).evaluate()
    assert check.deviation == pytest.approx(5e-3)
    assert check.status is CheckStatus.PASS


def test_zero_expectation_falls_back_to_absolute():
    check = CheckResult(name="lz", expected=0.0, observed=0.02, tolerance=1e-2).evaluate()
    assert check.deviation == pytest.approx(0.02)
    assert check.status is CheckStatus.FAIL


def test_tolerance_must_be_positive():
    with pytest.raises(ValidationError):
        CheckResult(name="norm", expected=1.0, observed=1.0, tolerance=0.0)


def test_report_collects_checks():
    report = CrossCheckReport(scenario="circle_fig5", geometry="circle")
    assert report.passed
    norm = report.add(CheckResult(name="norm", expected=1.0, observed=0.9995, tolerance=1e-3, relative=False))
    assert norm.status is CheckStatus.PASS
    report.add(CheckResult(name="energy", expected=10.0, observed=12.0, tolerance=1e-2))
    assert not report.passed
    assert [c.name for c in report.checks] == ["norm", "energy"]


def test_skipped_checks_do_not_fail_a_report():
    report = CrossCheckReport(scenario="s", geometry="square", checks=[CheckResult(name="x", expected=1.0, observed=5.0, tolerance=0.1)])
    assert report.checks[0].status is CheckStatus.SKIPPED
    assert report.passed


def test_status_is_validated_on_assignment():
    check = CheckResult(name="norm", expected=1.0, observed=1.0, tolerance=1e-3)
    check.status = "PASS"
    assert check.status is CheckStatus.PASS
    with pytest.raises(ValidationError):
        check.status = "MAYBE"
