from __future__ import annotations

import math

import numpy as np
import pytest

from billiardlab.analysis.peaks import detect_peaks
from billiardlab.common.enums import Geometry, Parity
from billiardlab.config import GaussianPacket2D
from billiardlab.core.evolution import autocorrelation
from billiardlab.core.moments import packet_energy_2d
from billiardlab.errors import FoldUnsupportedError, QuantumNumberError
from billiardlab.geometry import (
    IsocelesHalfSquare,
    RectBilliard,
    SquareSymmetryState,
    isoceles_closed_orbits,
    square_fold_isoceles,
)


@pytest.fixture()
def half_packet() -> GaussianPacket2D:
    return GaussianPacket2D(x0=0.7, y0=0.3, p0x=30.0, p0y=20.0, dx0=0.04)


def test_energies(square):
    pi2 = math.pi ** 2
    assert square.rect_energy(1, 1) == pytest.approx(2.0 * pi2)
    assert square.rect_energy(2, 1) == pytest.approx(5.0 * pi2)
    rect = RectBilliard(lx=2.0, ly=1.0)
    assert rect.rect_energy(1, 1) == pytest.approx(1.25 * pi2)
    assert rect.tag is Geometry.RECT
    assert square.tag is Geometry.SQUARE
    with pytest.raises(QuantumNumberError):
        square.rect_energy(0, 1)


def test_lowest_lines(square):
    lines = square.lowest_lines(3)
    assert [line.quantum_numbers for line in lines] == [(1, 1), (1, 2), (2, 1)]
    assert lines[1].energy == pytest.approx(lines[2].energy)


def test_product_coefficients_capture_the_packet(square, square_packet, units):
    exp = square.square_coefficients(square_packet)
    assert exp.captured_probability == pytest.approx(1.0, abs=1e-8)
    assert exp.moment(1) == pytest.approx(packet_energy_2d(square_packet, units), rel=1e-6)
    x_exp, y_exp = square.axis_expansions(square_packet)
    assert len(exp) == len(x_exp) * len(y_exp)


def test_product_autocorrelation_factorizes(square):
    packet = GaussianPacket2D(x0=0.45, y0=0.55, p0=10.0 * math.pi, theta_deg=30.0, dx0=0.05)
    times = np.linspace(0.0, 2.0 * square.revival_time(), 1201)
    x_exp, y_exp = square.axis_expansions(packet)
    product = autocorrelation(square.square_coefficients(packet), times).values
    factors = autocorrelation(x_exp, times).values * autocorrelation(y_exp, times).values
    assert np.max(np.abs(product - factors)) < 1e-12


def test_symmetry_basis_matches_product_basis(square, square_packet):
    product = square.square_coefficients(square_packet)
    symmetric = square.symmetry_coefficients(square_packet)
    assert symmetric.captured_probability == pytest.approx(1.0, abs=1e-8)
    assert symmetric.moment(1) == pytest.approx(product.moment(1), rel=1e-7)
    parities = {line.parity for line in symmetric.lines}
    assert parities == {Parity.MINUS, Parity.PLUS, Parity.ZERO}


def test_diagonal_packet_has_no_antisymmetric_part(square):
    packet = GaussianPacket2D(x0=0.5, y0=0.5, p0x=60.0, p0y=60.0, dx0=0.05)
    exp = square.symmetry_coefficients(packet)
    minus = np.array([line.parity is Parity.MINUS for line in exp.lines])
    assert np.max(np.abs(exp.coefficients[minus])) < 1e-12
    assert np.sum(exp.probabilities[~minus]) == pytest.approx(1.0, abs=1e-8)


def test_symmetry_states(square):
    x = np.linspace(0.05, 0.95, 7)
    minus = square.symmetric_eigenfunction(SquareSymmetryState(3, 1, Parity.MINUS), x, x)
    np.testing.assert_allclose(minus, 0.0, atol=1e-14)
    plus = square.symmetric_eigenfunction(SquareSymmetryState(3, 1, "plus"), x, x)
    np.testing.assert_allclose(plus, math.sqrt(2.0) * square.eigenfunction(3, 1, x, x), atol=1e-13)
    with pytest.raises(QuantumNumberError):
        SquareSymmetryState(2, 2, Parity.MINUS)
    with pytest.raises(QuantumNumberError):
        SquareSymmetryState(2, 1, Parity.ZERO)
    with pytest.raises(QuantumNumberError):
        SquareSymmetryState(2, 1, Parity.NONE)


def test_rectangle_refuses_diagonal_operations(square_packet):
    rect = RectBilliard(lx=1.5, ly=1.0)
    with pytest.raises(FoldUnsupportedError):
        square_fold_isoceles(rect)
    with pytest.raises(FoldUnsupportedError):
        rect.symmetry_coefficients(square_packet)


@pytest.mark.parametrize(
    "lx, expected",
    [
        (1.0, 2.0 / math.pi),
        (2.0, 8.0 / math.pi),
        (1.5, 18.0 / math.pi),
        (math.sqrt(2.0), 4.0 / math.pi),
    ],
)
def test_common_revival_time(lx, expected):
    rect = RectBilliard(lx=lx, ly=1.0)
    assert rect.revival_time() == pytest.approx(expected)
    _, t_y = rect.axis_revival_times()
    assert (rect.revival_time() / t_y) == pytest.approx(round(rect.revival_time() / t_y))


def test_incommensurate_sides_have_no_revival():
    assert RectBilliard(lx=2.0 ** 0.25, ly=1.0).revival_time() is None


def test_square_revival(square, square_packet):
    exp = square.expand(square_packet)
    t_rev = square.revival_time()
    values = autocorrelation(exp, [t_rev, 0.5 * t_rev]).magnitudes_sq
    assert values[0] == pytest.approx(1.0, abs=1e-6)


def test_tau(square, square_packet):
    assert square.tau(square_packet) == pytest.approx(2.0 * 0.5 / (40.0 * math.pi))
    resting = GaussianPacket2D(x0=0.5, y0=0.5, p0x=0.0, p0y=0.0, dx0=0.05)
    assert math.isinf(square.tau(resting))


@pytest.mark.parametrize("x0, y0", [(0.5, 0.5), (0.3, 0.6)])
@pytest.mark.parametrize(
    "theta, period_over_tau",
    [
        (0.0, 1.0),
        (18.43, math.sqrt(10.0)),
        (26.57, math.sqrt(5.0)),
        (33.69, math.sqrt(13.0)),
        (45.0, math.sqrt(2.0)),
    ],
)
def test_closed_orbit_returns(square, theta, period_over_tau, x0, y0):
    packet = GaussianPacket2D(x0=x0, y0=y0, p0=400.0 * math.pi, theta_deg=theta, dx0=0.05)
    exp = square.expand(packet)
    expected = period_over_tau * square.tau(packet)
    times = np.linspace(0.8 * expected, 1.2 * expected, 801)
    peaks = detect_peaks(autocorrelation(exp, times), threshold=0.3)
    assert peaks
    best = max(peaks, key=lambda p: p.magnitude)
    assert best.time == pytest.approx(expected, rel=1e-2)
    assert best.magnitude > 0.5


def test_isoceles_geometry():
    half = square_fold_isoceles(RectBilliard.square(1.0))
    assert isinstance(half, IsocelesHalfSquare)
    assert half.tag is Geometry.ISOCELES45
    assert half.energy(2, 1) == pytest.approx(5.0 * math.pi ** 2)
    with pytest.raises(QuantumNumberError):
        half.energy(1, 2)
    with pytest.raises(QuantumNumberError):
        half.energy(2, 2)
    assert half.eigenfunction(3, 1, 0.3, 0.7) == 0.0
    assert half.eigenfunction(3, 1, 0.5, 0.5) == 0.0
    assert half.eigenfunction(3, 1, 0.7, 0.2) != 0.0
    assert [line.quantum_numbers for line in half.lowest_lines(2)] == [(2, 1), (3, 1)]


def test_isoceles_coefficients(half_packet, units):
    half = IsocelesHalfSquare(a=1.0)
    exp = half.expand(half_packet)
    assert all(n > m for n, m in (line.quantum_numbers for line in exp.lines))
    assert exp.captured_probability == pytest.approx(1.0, abs=1e-8)
    assert exp.moment(1) == pytest.approx(packet_energy_2d(half_packet, units), rel=1e-6)
    values = autocorrelation(exp, [half.revival_time()]).magnitudes_sq
    assert values[0] == pytest.approx(1.0, abs=1e-6)


def test_isoceles_margin_includes_the_hypotenuse(half_packet):
    half = IsocelesHalfSquare(a=1.0)
    assert half.wall_margin(half_packet) == pytest.approx(0.4 / math.sqrt(2.0))
    assert half.check_margin(half_packet)


def test_isoceles_orbits_add_the_corner_orbit():
    orbits = isoceles_closed_orbits(1.0)
    special = [o for o in orbits if o.special]
    assert len(special) == 1
    assert special[0].launch == 135.0
    assert special[0].period_over_tau == pytest.approx(math.sqrt(2.0) / 4.0)
    assert special[0].recurrences == pytest.approx((0.25 * math.sqrt(2.0), 0.5 * math.sqrt(2.0)))
