"""Integer-order Bessel functions of the first kind and their zeros.

Values come from :func:`scipy.special.jv`. Zeros are isolated row by row: order 0
is bracketed around the asymptotic estimate (n_r + m/2 + 3/4)π, and every higher
order uses the interlacing property z(m-1, n_r) < z(m, n_r) < z(m-1, n_r+1), which
gives a bracket containing exactly one sign change. Each bracket is refined with
Brent's method.
"""
from __future__ import annotations

import math
import threading
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import Union

import numpy as np
from scipy import optimize
from scipy import special

from .._log import get_logger
from ..errors import NumericalError
from ..errors import QuantumNumberError
from ..errors import RootIsolationError
from ..errors import UnsupportedOrderError

logger = get_logger(__name__)

MAX_ORDER = 200
MAX_RADIAL_INDEX = 4000
DEFAULT_TOL = 1e-12

_ROWS: dict[int, list[float]] = {}
_ROWS_LOCK = threading.RLock()


def _check_order(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0 or m > MAX_ORDER:
        raise UnsupportedOrderError(m, MAX_ORDER)
    return int(m)


def _check_index(n_r: int) -> int:
    if isinstance(n_r, bool) or not isinstance(n_r, (int, np.integer)) or n_r < 0 or n_r > MAX_RADIAL_INDEX:
        raise QuantumNumberError("n_r", n_r, f"0..{MAX_RADIAL_INDEX}")
    return int(n_r)


def bessel_j(m: int, z: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """J_m(z) for integer 0 <= m <= 200 and z >= 0.

    Accepts a scalar or an array of arguments and returns the same shape.

    Raises:
        UnsupportedOrderError: If m is not an integer in the supported range.
        NumericalError: If z contains non-finite values.
    """
    m = _check_order(m)
    z_arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z_arr)):
        raise NumericalError(f"bessel_j received non-finite argument(s) for order {m}")
    if np.any(z_arr < 0):
        raise ValueError("bessel_j is defined here for z >= 0 only")
    values = special.jv(m, z_arr)
    if values.ndim == 0:
        return float(values)
    return values


def asymptotic_zero(m: int, n_r: int) -> float:
    """Large-z estimate (n_r + m/2 + 3/4)π of the zero z(m, n_r)."""
    return (n_r + 0.5 * m + 0.75) * math.pi


def _refine(m: int, index: int, lo: float, hi: float, tol: float) -> float:
    f_lo = special.jv(m, lo)
    f_hi = special.jv(m, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise RootIsolationError(m, index, (lo, hi), "no sign change in bracket")
    z = optimize.brentq(lambda x: special.jv(m, x), lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
    residual = abs(special.jv(m, z))
    if residual >= tol:
        raise RootIsolationError(m, index, (lo, hi), f"|J(z)| = {residual:.3e} above tolerance {tol:.1e}")
    return float(z)


def _order_zero_zero(index: int, tol: float) -> float:
    seed = asymptotic_zero(0, index)
    lo, hi = seed - 0.5 * math.pi, seed + 0.5 * math.pi
    for _ in range(8):
        if np.sign(special.jv(0, lo)) != np.sign(special.jv(0, hi)):
            return _refine(0, index, lo, hi, tol)
        lo = max(lo - 0.5 * math.pi, 1e-3)
        hi = hi + 0.5 * math.pi
    raise RootIsolationError(0, index, (lo, hi), "bracket expansion exhausted")


def _ensure_rows(m: int, count: int) -> None:
    """Grow the cached rows so that row m holds at least ``count`` zeros."""
    with _ROWS_LOCK:
        for order in range(m + 1):
            needed = count + (m - order)
            row = _ROWS.setdefault(order, [])
            if len(row) >= needed:
                continue
            logger.debug(f"extending zero row m={order} from {len(row)} to {needed}")
            for k in range(len(row), needed):
                if order == 0:
                    z = _order_zero_zero(k, DEFAULT_TOL)
                else:
                    below = _ROWS[order - 1]
                    z = _refine(order, k, below[k], below[k + 1], DEFAULT_TOL)
                if row and z <= row[-1]:
                    raise RootIsolationError(order, k, (row[-1], z), "zeros out of order")
                row.append(z)


def bessel_zero(m: int, n_r: int, tol: float = DEFAULT_TOL) -> float:
    """The (n_r+1)-th positive zero of J_m.

    Args:
        m: Order, 0..200.
        n_r: Radial index (number of interior nodes), starting at 0.
        tol: Required bound on |J_m(z)| at the returned zero.

    Raises:
        UnsupportedOrderError: For orders outside 0..200.
        RootIsolationError: If a bracket has no sign change or the residual exceeds ``tol``.
    """
    m = _check_order(m)
    n_r = _check_index(n_r)
    _ensure_rows(m, n_r + 1)
    z = _ROWS[m][n_r]
    residual = abs(special.jv(m, z))
    if residual >= tol:
        raise RootIsolationError(m, n_r, (z, z), f"|J(z)| = {residual:.3e} above tolerance {tol:.1e}")
    return z


def bessel_zeros(m: int, count: int) -> np.ndarray:
    """The first ``count`` zeros of J_m as an array."""
    m = _check_order(m)
    if count <= 0:
        return np.empty(0)
    _check_index(count - 1)
    _ensure_rows(m, count)
    return np.array(_ROWS[m][:count])


@dataclass(frozen=True)
class BesselZeroTable:
    """Read-only snapshot of z(m, n_r) for 0 <= m <= m_max, 0 <= n_r <= nr_max."""
    m_max: int
    nr_max: int
    entries: Mapping[tuple[int, int], float]

    @classmethod
    def build(cls, m_max: int, nr_max: int) -> BesselZeroTable:
        m_max = _check_order(m_max)
        nr_max = _check_index(nr_max)
        _ensure_rows(m_max, nr_max + 1)
        with _ROWS_LOCK:
            entries = {(m, k): _ROWS[m][k] for m in range(m_max + 1) for k in range(nr_max + 1)}
        return cls(m_max, nr_max, MappingProxyType(entries))

    def zero(self, m: int, n_r: int) -> float:
        try:
            return self.entries[(abs(m), n_r)]
        except KeyError:
            raise QuantumNumberError("(m, n_r)", (m, n_r), f"|m| <= {self.m_max}, n_r <= {self.nr_max}") from None

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def max_residual(self) -> float:
        return max(abs(special.jv(m, z)) for (m, _), z in self.entries.items())

    def is_interlaced(self) -> bool:
        """True when z(m, k) < z(m+1, k) < z(m, k+1) for every stored triple."""
        for (m, k), z in self.entries.items():
            above = self.entries.get((m + 1, k))
            nxt = self.entries.get((m, k + 1))
            if nxt is not None and not z < nxt:
                return False
            if above is not None and not z < above:
                return False
            if above is not None and nxt is not None and not above < nxt:
                return False
        return True
