"""
Error measures shared by every check in the engine and the runner.
"""
import numpy as np

from .settings import tolerance_setting


def relative_errors(value, reference, scale=None, floor: float | None = None) -> np.ndarray:
    """Elementwise |value - reference| / max(|reference|, floor * scale).

    `scale` is the natural magnitude of the computation (for a multiplier applied to a
    series, the sum of absolute terms). It keeps vanishing references from turning
    round-off into unbounded relative errors. Without a scale the error is purely relative.
    """
    value = np.asarray(value, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    diff = np.abs(value - reference)
    if floor is None:
        floor = tolerance_setting.relative_floor
    denom = np.abs(reference)
    if scale is not None:
        denom = np.maximum(denom, floor * np.abs(np.asarray(scale, dtype=float)))
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(diff == 0.0, 0.0, diff / denom)


def relative_error(value, reference, scale=None, floor: float | None = None) -> float:
    """Largest of the elementwise relative errors; 0 for empty input."""
    ratio = relative_errors(value, reference, scale, floor)
    if ratio.size == 0:
        return 0.0
    return float(np.max(ratio))


def next_power_of_two(value: int) -> int:
    return 1 << max(0, int(value - 1).bit_length())
