"""
🧪 VERIFICATION HARNESS
Runs every checkable statement against enumerated and sampled corpora.
"""

from .checks import CHECKS, CheckDefinition
from .corpus import CfcMemo, CheckContext, Instance, Outcome
from .report import SCHEMA_VERSION, CheckId, CheckReport, CheckSpec, Counterexample, CorpusBounds, Report
from .runner import make_bounds, recheck, run_all, run_check

__all__ = [
    "CHECKS",
    "CheckDefinition",
    "CfcMemo",
    "CheckContext",
    "Instance",
    "Outcome",
    "SCHEMA_VERSION",
    "CheckId",
    "CheckReport",
    "CheckSpec",
    "Counterexample",
    "CorpusBounds",
    "Report",
    "make_bounds",
    "recheck",
    "run_all",
    "run_check",
]
