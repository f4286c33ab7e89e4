from __future__ import annotations

import warnings
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import integrate
from scipy import special

from ..errors import AccuracyError
from ..errors import NumericalError

MIN_ORDER = 8


@lru_cache(maxsize=64)
def _legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = special.roots_legendre(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(order: int, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the ``order``-point Gauss–Legendre rule on [lo, hi]."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    x, w = _legendre(int(order))
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


def _sample(f: Callable, r: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f(r), dtype=float)
    except TypeError:
        values = np.array([f(float(x)) for x in r], dtype=float)
    if values.shape != r.shape:
        values = np.array([f(float(x)) for x in r], dtype=float)
    if not np.all(np.isfinite(values)):
        raise NumericalError("integrand produced non-finite samples")
    return values


def quad_radial(f: Callable, R: float, order: int = 32) -> float:
    """Fixed-order Gauss–Legendre approximation of ∫₀^R f(r) dr.

    ``f`` may be vectorized (called once with all nodes) or scalar. The rule is
    exact for polynomials of degree 2·order − 1; for smooth integrands the error
    falls geometrically when the order is doubled, see :func:`radial_converged`.

    Raises:
        ValueError: If ``order`` < 8 or ``R`` <= 0.
        NumericalError: If any sample of ``f`` is not finite.
    """
    if order < MIN_ORDER:
        raise ValueError(f"quadrature order must be >= {MIN_ORDER}, got {order}")
    if not R > 0:
        raise ValueError(f"R must be positive, got {R}")
    r, w = gauss_legendre(order, 0.0, R)
    return float(np.dot(w, _sample(f, r)))


def radial_converged(
    f: Callable, R: float, order: int = 32, rtol: float = 1e-12, max_order: int = 2048
) -> tuple[float, float, int]:
    """Double the order until two successive estimates agree.

    Returns:
        (value, difference between the last two estimates, order used).

    Raises:
        AccuracyError: If ``max_order`` is reached without agreement.
    """
    previous = quad_radial(f, R, order)
    change = float("inf")
    while order * 2 <= max_order:
        order *= 2
        current = quad_radial(f, R, order)
        change = abs(current - previous)
        if change <= rtol * max(1.0, abs(current)):
            return current, change, order
        previous = current
    raise AccuracyError("radial quadrature", change, rtol, f"order {order} reached")


def fourier_integral(
    envelope: Callable[[np.ndarray], np.ndarray],
    omega: float,
    lo: float,
    hi: float,
    tolerance: float = 1e-9,
) -> complex:
    """∫_lo^hi envelope(x)·exp(iωx) dx for a smooth real envelope.

    Uses QUADPACK's Clenshaw–Curtis rule for oscillatory weights, so large ω over
    wide intervals costs no more than small ω.

    Raises:
        AccuracyError: If the combined error estimate exceeds ``tolerance``.
    """
    if hi <= lo:
        return 0j
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if abs(omega) * (hi - lo) < 1e-12:
            real, err_re = integrate.quad(envelope, lo, hi, epsabs=1e-14, epsrel=1e-12, limit=200)
            imag, err_im = 0.0, 0.0
        else:
            real, err_re = integrate.quad(
                envelope, lo, hi, weight="cos", wvar=omega, epsabs=1e-14, epsrel=1e-12, limit=200
            )
            imag, err_im = integrate.quad(
                envelope, lo, hi, weight="sin", wvar=omega, epsabs=1e-14, epsrel=1e-12, limit=200
            )
    if not (np.isfinite(real) and np.isfinite(imag)):
        raise NumericalError("oscillatory quadrature produced non-finite values")
    error = abs(err_re) + abs(err_im)
    if error > tolerance:
        raise AccuracyError("oscillatory quadrature", error, tolerance)
    return complex(real, imag)
