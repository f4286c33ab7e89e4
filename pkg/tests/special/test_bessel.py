from __future__ import annotations

import numpy as np
import pytest
from scipy import special

from billiardlab.errors import QuantumNumberError, UnsupportedOrderError
from billiardlab.special.bessel import (
    BesselZeroTable,
    asymptotic_zero,
    bessel_j,
    bessel_zero,
    bessel_zeros,
)


@pytest.mark.parametrize(
    "m, n_r, expected",
    [
        (0, 0, 2.404825557695773),
        (0, 1, 5.520078110286311),
        (1, 0, 3.831705970207512),
        (2, 0, 5.135622301840683),
        (5, 2, 15.700174079711671),
    ],
)
def test_known_zeros(m, n_r, expected):
    assert bessel_zero(m, n_r) == pytest.approx(expected, abs=1e-12)


def test_zeros_match_scipy_table():
    np.testing.assert_allclose(bessel_zeros(3, 10), special.jn_zeros(3, 10), rtol=0, atol=1e-11)


def test_bessel_j_shapes_and_values():
    assert bessel_j(0, 0.0) == pytest.approx(1.0)
    values = bessel_j(2, np.array([0.0, 1.0, 2.0]))
    assert values.shape == (3,)
    np.testing.assert_allclose(values, special.jv(2, [0.0, 1.0, 2.0]))


def test_order_limits():
    with pytest.raises(UnsupportedOrderError):
        bessel_j(201, 1.0)
    with pytest.raises(UnsupportedOrderError):
        bessel_zero(-1, 0)
    with pytest.raises(UnsupportedOrderError):
        bessel_zero(1.5, 0)
    with pytest.raises(QuantumNumberError):
        bessel_zero(0, -1)


def test_high_order_zero_is_a_root():
    z = bessel_zero(200, 3)
    assert z > 200.0
    assert abs(special.jv(200, z)) < 1e-12


def test_empty_request():
    assert bessel_zeros(4, 0).size == 0


def test_table_residual_and_interlacing():
    table = BesselZeroTable.build(50, 50)
    assert len(table) == 51 * 51
    assert table.max_residual() < 1e-12
    assert table.is_interlaced()
    assert table.zero(-3, 2) == table.zero(3, 2)
    with pytest.raises(QuantumNumberError):
        table.zero(51, 0)


@pytest.mark.parametrize("m", [0, 1, 2, 3, 5, 10, 20, 50])
def test_asymptotic_seed(m):
    # the seed β overshoots every zero for m ≥ 1 and undershoots for m = 0;
    # the gap is about (4m² − 1)/8β, so it only closes once β ≫ m²
    for n_r in range(0, 51):
        seed, zero = asymptotic_zero(m, n_r), bessel_zero(m, n_r)
        if m == 0:
            assert seed < zero
        else:
            assert zero < seed
        if (4 * m * m - 1) / (8.0 * seed) < 0.04:
            assert abs(seed - zero) < 0.05, n_r
    if m <= 5:
        assert seed - zero == pytest.approx((4 * m * m - 1) / (8.0 * seed), rel=0.05)
