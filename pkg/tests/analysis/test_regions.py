from __future__ import annotations

import numpy as np
import pytest

from billiardlab.analysis.regions import probability_regions
from billiardlab.common.enums import Geometry
from billiardlab.core.spectrum import Expansion, SpectralLine


def _expansion(weights):
    lines = tuple(SpectralLine((m, 0), float(m), Geometry.CIRCLE) for m in range(len(weights)))
    return Expansion(lines, np.sqrt(np.asarray(weights, dtype=float)))


def test_regions_take_largest_states_first():
    exp = _expansion([0.05, 0.5, 0.3, 0.15])
    regions = probability_regions(exp, levels=(0.68, 0.997))
    assert [line.quantum_numbers[0] for line, _ in regions[0.68]] == [1, 2]
    assert len(regions[0.997]) == 4
    assert regions[0.68][0][1] == pytest.approx(0.5)


def test_levels_relative_to_captured_probability():
    exp = _expansion([0.25, 0.25])
    regions = probability_regions(exp, levels=(0.5,))
    assert len(regions[0.5]) == 1


def test_invalid_level():
    with pytest.raises(ValueError):
        probability_regions(_expansion([0.5]), levels=(0.0,))
