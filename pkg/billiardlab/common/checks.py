from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class CheckResult(BaseModel):
    """One expansion-versus-analytic comparison."""
    model_config = ConfigDict(validate_assignment=True)

    name: str
    expected: float
    observed: float
    tolerance: float = Field(..., gt=0)
    relative: bool = True
    status: CheckStatus = CheckStatus.SKIPPED
    note: Optional[str] = None

    @property
    def deviation(self) -> float:
        diff = abs(self.observed - self.expected)
        if self.relative and self.expected != 0:
            return diff / abs(self.expected)
        return diff

    def evaluate(self) -> CheckResult:
        self.status = CheckStatus.PASS if self.deviation <= self.tolerance else CheckStatus.FAIL
        return self


class CrossCheckReport(BaseModel):
    model_config = ConfigDict(validate_assignment=True)

    scenario: str
    geometry: str
    checks: list[CheckResult] = []
    warnings: list[str] = []

    @property
    def passed(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check.evaluate())
        return check
