from .checks import CheckResult, CheckStatus, CrossCheckReport
from .enums import Geometry, OverlapKind, Parity

__all__ = ["CheckResult", "CheckStatus", "CrossCheckReport", "Geometry", "OverlapKind", "Parity"]
