from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, replace
from typing import Callable, Union

import numpy as np

from .._log import get_logger
from ..common.enums import Geometry
from ..errors import BasisMismatchError, EmptyExpansionError
from .spectrum import Expansion, SpectralLine

logger = get_logger(__name__)

# complex entries held at once by the phase matrix
_CHUNK_ELEMENTS = 2_000_000


@dataclass(frozen=True)
class Peak:
    time: float
    magnitude: float


@dataclass(frozen=True, eq=False)
class AutocorrelationSeries:
    times: np.ndarray
    values: np.ndarray
    magnitudes_sq: np.ndarray
    peaks: tuple[Peak, ...] = ()

    def __len__(self) -> int:
        return int(self.times.size)

    def with_peaks(self, peaks: Sequence[Peak]) -> AutocorrelationSeries:
        return replace(self, peaks=tuple(peaks))


@dataclass(frozen=True)
class EigenBasis:
    """Eigenfunction evaluator for one geometry.

    ``evaluate(line, points)`` returns u(points) for points of shape (P,) in 1D
    or (P, 2) in 2D.
    """
    geometry: Geometry
    evaluate: Callable[[SpectralLine, np.ndarray], np.ndarray]

    def __call__(self, line: SpectralLine, points: np.ndarray) -> np.ndarray:
        return self.evaluate(line, points)


def _phases(energies: np.ndarray, times: np.ndarray, hbar: float) -> np.ndarray:
    return np.exp(-1j * np.outer(times, energies) / hbar)


def autocorrelation(exp: Expansion, times: Union[Sequence[float], np.ndarray]) -> AutocorrelationSeries:
    """A(t) = Σ|a|²·exp(-iEt/ħ) sampled on ``times``.

    Raises:
        EmptyExpansionError: If the expansion has no terms.
    """
    if len(exp) == 0:
        raise EmptyExpansionError()
    t = np.asarray(times, dtype=float).reshape(-1)
    probs = exp.probabilities
    energies = exp.energies
    values = np.empty(t.size, dtype=complex)
    step = max(1, _CHUNK_ELEMENTS // len(exp))
    for start in range(0, t.size, step):
        block = t[start:start + step]
        values[start:start + step] = _phases(energies, block, exp.hbar) @ probs
    logger.debug(f"autocorrelation: {t.size} samples over {len(exp)} lines")
    return AutocorrelationSeries(t, values, np.abs(values) ** 2)


def density_on_grid(exp: Expansion, basis: EigenBasis, points: np.ndarray, t: float) -> np.ndarray:
    """|ψ(point, t)|² at every row of ``points``.

    Raises:
        BasisMismatchError: If ``basis`` belongs to another geometry.
    """
    if len(exp) == 0:
        raise EmptyExpansionError()
    if basis.geometry is not exp.geometry:
        raise BasisMismatchError(exp.geometry.value if exp.geometry else None, basis.geometry.value)
    pts = np.asarray(points, dtype=float)
    psi = np.zeros(pts.shape[0], dtype=complex)
    phases = np.exp(-1j * exp.energies * t / exp.hbar) * exp.coefficients
    for line, weight in zip(exp.lines, phases):
        psi += weight * basis(line, pts)
    return np.abs(psi) ** 2


def evolve_density(
    exp: Expansion, basis_eval: EigenBasis, point: Union[float, Sequence[float]], t: float
) -> float:
    """|ψ(point, t)|² from the coherent sum over the expansion."""
    pts = np.atleast_1d(np.asarray(point, dtype=float))
    pts = pts.reshape(1, -1) if pts.size > 1 else pts.reshape(1)
    return float(density_on_grid(exp, basis_eval, pts, t)[0])
