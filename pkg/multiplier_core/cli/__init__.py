"""
Batch experiment runner

JSON experiment files in; CSV/JSON tables and a deterministic run report out.
"""

from .commands import (
    run_apply,
    run_bench,
    run_compose,
    run_moments,
    run_seminorm,
    run_transform,
    run_verify,
)
from .output import write_report, write_table
from .types import ANCHORS, CheckRow, CommandResult, ConfigErrorResponse, ErrorResponse, RunReport, Table

__all__ = [
    "run_apply",
    "run_bench",
    "run_compose",
    "run_moments",
    "run_seminorm",
    "run_transform",
    "run_verify",
    "write_report",
    "write_table",
    "ANCHORS",
    "CheckRow",
    "CommandResult",
    "ConfigErrorResponse",
    "ErrorResponse",
    "RunReport",
    "Table",
]
