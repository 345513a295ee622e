"""
Runner commands, one module per subcommand.
"""

from .apply import run_apply
from .bench import run_bench
from .compose import run_compose
from .moments import run_moments
from .seminorm import run_seminorm
from .transform import run_transform
from .verify import run_verify

__all__ = [
    "run_apply",
    "run_bench",
    "run_compose",
    "run_moments",
    "run_seminorm",
    "run_transform",
    "run_verify",
]
