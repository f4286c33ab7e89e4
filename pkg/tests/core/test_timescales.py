from __future__ import annotations

import math

import pytest

from billiardlab.config import PhysicalUnits
from billiardlab.core.timescales import time_scales


def test_quadratic_spectrum(units):
    # E = c·n²: T_cl = 2πħ/(2cn), T_rev = 2πħ/c, no super revival
    c = math.pi ** 2
    scales = time_scales(lambda n: c * n * n, (10,), units, ("n",))
    assert scales.t_classical["n"] == pytest.approx(2.0 * math.pi / (20.0 * c))
    assert scales.t_revival["n"] == pytest.approx(2.0 * math.pi / c)
    assert math.isinf(scales.t_super)
    assert math.isinf(scales.t_spread)


def test_well_revival_is_two_over_pi(well, centred_packet):
    scales = well.time_scales(centred_packet)
    assert scales.t_revival["n"] == pytest.approx(2.0 / math.pi)
    assert scales.t_spread == pytest.approx(centred_packet.b ** 2 / 2.0)


def test_cubic_term_gives_super_revival(units):
    scales = time_scales(lambda n: n ** 3, (5,), units)
    # third difference of n³ is 6 → T_super = 2π/(6/6)
    assert scales.t_super == pytest.approx(2.0 * math.pi)
    assert "n1" in scales.t_classical


def test_mixed_derivative_rows(units):
    scales = time_scales(lambda a, b: a * a + 3.0 * a * b + b * b, (4, 7), units, ("a", "b"))
    assert scales.t_revival["a,b"] == pytest.approx(2.0 * math.pi / 3.0)
    quantities = {(q, label) for q, label, _ in scales.rows()}
    assert ("revival", "a,b") in quantities
    assert ("super_revival", "") in quantities


def test_label_count_must_match(units):
    with pytest.raises(ValueError):
        time_scales(lambda a, b: a + b, (1, 2), units, ("only",))
    with pytest.raises(ValueError):
        time_scales(lambda: 0.0, (), units)


def test_hbar_scales_periods():
    scales = time_scales(lambda n: n * n, (3,), PhysicalUnits(hbar=2.0))
    assert scales.t_revival["n1"] == pytest.approx(4.0 * math.pi)


def test_triangle_revivals_coincide(triangle, triangle_packet):
    scales = time_scales(triangle.energy_formula, triangle.window_centre(triangle_packet), triangle.units, ("m", "n"))
    assert set(scales.t_revival) == {"m", "n", "m,n"}
    # 9μa²/(4πħ)
    for value in scales.t_revival.values():
        assert value == pytest.approx(9.0 * 0.5 / (4.0 * math.pi))
    assert triangle.revival_time() == pytest.approx(scales.t_revival["m"])
    assert math.isinf(scales.t_super)


def test_harmonic_spectrum_never_revives(units):
    scales = time_scales(lambda n: 3.0 * n + 0.5, (40,), units)
    assert scales.t_classical["n1"] == pytest.approx(2.0 * math.pi / 3.0)
    assert math.isinf(scales.t_revival["n1"])
    assert math.isinf(scales.t_super)
