from __future__ import annotations

import numpy as np
import pytest

from billiardlab.common.enums import Geometry, Parity
from billiardlab.core.spectrum import Expansion, SpectralLine
from billiardlab.errors import NormalizationError


def _line(n, energy=1.0, geometry=Geometry.WELL1D, parity=Parity.NONE):
    return SpectralLine((n,) if geometry is Geometry.WELL1D else n, energy, geometry, parity)


def test_labels():
    assert _line(3).label == "(3)"
    line = SpectralLine((4, 2), 10.0, Geometry.TRIANGLE, Parity.ZERO)
    assert line.label == "(4,2)0"
    assert SpectralLine((2, 1), 5.0, Geometry.SQUARE, Parity.MINUS).label == "(2,1)-"


def test_angular_number_only_on_full_disk():
    assert SpectralLine((-3, 1), 1.0, Geometry.CIRCLE).angular_number == -3
    assert SpectralLine((3, 1), 1.0, Geometry.HALFCIRCLE).angular_number is None


def test_captured_probability_and_moments():
    lines = (_line(1, 2.0), _line(2, 8.0))
    exp = Expansion(lines, np.array([0.6, 0.8j]))
    assert exp.captured_probability == pytest.approx(1.0)
    assert exp.moment(1) == pytest.approx(0.36 * 2.0 + 0.64 * 8.0)
    assert exp.moment(2) == pytest.approx(0.36 * 4.0 + 0.64 * 64.0)
    assert len(exp) == 2
    assert exp.geometry is Geometry.WELL1D


def test_coefficients_are_read_only():
    exp = Expansion((_line(1),), np.array([0.5]))
    with pytest.raises(ValueError):
        exp.coefficients[0] = 1.0


def test_overshoot_raises():
    with pytest.raises(NormalizationError) as info:
        Expansion((_line(1), _line(2)), np.array([0.9, 0.9]))
    assert info.value.captured == pytest.approx(1.62)


def test_mismatched_lengths_and_geometries():
    with pytest.raises(ValueError, match="coefficients"):
        Expansion((_line(1),), np.array([0.1, 0.2]))
    mixed = (_line(1), SpectralLine((1, 1), 1.0, Geometry.SQUARE))
    with pytest.raises(ValueError, match="mixes geometries"):
        Expansion(mixed, np.array([0.1, 0.2]))


def test_angular_moment():
    lines = (SpectralLine((2, 0), 1.0, Geometry.CIRCLE), SpectralLine((-1, 0), 1.0, Geometry.CIRCLE))
    exp = Expansion(lines, np.array([0.6, 0.8]), hbar=2.0)
    assert exp.angular_moment(1) == pytest.approx(0.36 * 4.0 - 0.64 * 2.0)
    assert exp.angular_moment(2) == pytest.approx(0.36 * 16.0 + 0.64 * 4.0)
    with pytest.raises(ValueError):
        Expansion((_line(1),), np.array([0.5])).angular_moment(1)


def test_from_terms_and_select():
    terms = [(_line(n, float(n)), 0.1 * n) for n in range(1, 4)]
    exp = Expansion.from_terms(terms)
    assert [c for _, c in exp.terms] == pytest.approx([0.1, 0.2, 0.3])
    picked = exp.select([True, False, True])
    assert [line.quantum_numbers for line in picked.lines] == [(1,), (3,)]
