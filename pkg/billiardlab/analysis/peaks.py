# billiardlab/analysis/peaks.py
import numpy as np

from ..core.evolution import AutocorrelationSeries, Peak


def _refine(t: np.ndarray, y: np.ndarray, i: int) -> Peak:
    """Vertex of the parabola through samples i-1, i, i+1."""
    dt = t[i - 1:i + 2] - t[i]
    a, b, c = np.polyfit(dt, y[i - 1:i + 2], 2)
    if a >= 0:
        return Peak(float(t[i]), float(y[i]))
    offset = float(np.clip(-b / (2.0 * a), dt[0], dt[2]))
    return Peak(float(t[i] + offset), float(np.polyval((a, b, c), offset)))


def detect_peaks(series: AutocorrelationSeries, threshold: float = 0.1) -> list[Peak]:
    """
    Local maxima of |A(t)|² above ``threshold``.

    Args:
        series: Sampled autocorrelation; times must be increasing.
        threshold: Minimum |A|², strictly between 0 and 1.

    Returns:
        Peaks in time order with parabolically refined time and height. The first
        and last samples are never reported.
    """
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {threshold}")
    t = np.asarray(series.times, dtype=float)
    y = np.asarray(series.magnitudes_sq, dtype=float)
    if t.ndim != 1 or t.size != y.size:
        raise ValueError("times and magnitudes must be 1-dimensional and of equal size.")
    if t.size < 3:
        return []
    if np.any(np.diff(t) <= 0):
        raise ValueError("times must be strictly increasing")

    inner = y[1:-1]
    candidates = np.nonzero((inner > y[:-2]) & (inner >= y[2:]) & (inner > threshold))[0] + 1
    return [_refine(t, y, int(i)) for i in candidates]


def largest_return(series: AutocorrelationSeries, drop: float = 0.5) -> float:
    """
    Largest |A|² after the series first falls below ``drop`` times its initial value.

    The initial decay around t = 0 is excluded, so the result measures how closely
    the packet comes back. Returns 0.0 if the series never drops.
    """
    y = np.asarray(series.magnitudes_sq, dtype=float)
    if y.size == 0:
        return 0.0
    below = np.nonzero(y < drop * y[0])[0]
    if below.size == 0:
        return 0.0
    return float(np.max(y[below[0]:]))
