from __future__ import annotations

import numpy as np
import pytest

from billiardlab.analysis.peaks import detect_peaks, largest_return
from billiardlab.core.evolution import AutocorrelationSeries


def _series(t, y):
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    return AutocorrelationSeries(t, np.sqrt(y).astype(complex), y)


def test_parabolic_refinement_finds_off_grid_maximum():
    t = np.linspace(0.0, 2.0, 201)
    y = 0.9 * np.exp(-((t - 1.2345) / 0.05) ** 2)
    peaks = detect_peaks(_series(t, y), threshold=0.1)
    assert len(peaks) == 1
    assert peaks[0].time == pytest.approx(1.2345, abs=2e-4)
    assert peaks[0].magnitude == pytest.approx(0.9, abs=5e-3)


def test_threshold_and_endpoints():
    t = np.linspace(0.0, 1.0, 11)
    y = np.array([1.0, 0.2, 0.05, 0.3, 0.05, 0.02, 0.08, 0.02, 0.5, 0.4, 0.9])
    peaks = detect_peaks(_series(t, y), threshold=0.1)
    # t = 0 and the last sample are never peaks; 0.08 is below threshold
    assert [round(p.time, 1) for p in peaks] == [0.3, 0.8]


def test_invalid_inputs():
    t = np.linspace(0.0, 1.0, 5)
    with pytest.raises(ValueError):
        detect_peaks(_series(t, np.zeros(5)), threshold=1.5)
    with pytest.raises(ValueError):
        detect_peaks(_series(t[::-1], np.zeros(5)))
    assert detect_peaks(_series([0.0, 1.0], [0.5, 0.5])) == []


def test_largest_return_skips_initial_decay():
    t = np.linspace(0.0, 1.0, 6)
    y = np.array([1.0, 0.8, 0.3, 0.6, 0.2, 0.1])
    assert largest_return(_series(t, y)) == pytest.approx(0.6)
    assert largest_return(_series(t, np.ones(6))) == 0.0


def test_two_frequency_signal():
    # 1/2 + cos(2πt)/4 + cos(4πt)/4 peaks at every half period, alternating 1/2 and 1
    t = np.linspace(0.0, 3.0, 1000)
    y = 0.5 + 0.25 * np.cos(2.0 * np.pi * t) + 0.25 * np.cos(4.0 * np.pi * t)
    peaks = detect_peaks(_series(t, y), threshold=0.3)
    assert [p.time for p in peaks] == pytest.approx([0.5, 1.0, 1.5, 2.0, 2.5], abs=1e-5)
    assert [p.magnitude for p in peaks] == pytest.approx([0.5, 1.0, 0.5, 1.0, 0.5], abs=1e-5)
    assert len(detect_peaks(_series(t, y), threshold=0.75)) == 2
