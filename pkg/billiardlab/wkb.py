"""Semiclassical period and quantization integrals for 1D potentials.

Turning-point singularities are removed with x = a + s² near the left turning
point and x = b − s² near the right one, splitting the interval at its midpoint.
"""
from __future__ import annotations

import math
import warnings
from collections.abc import Sequence
from typing import Callable, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate, optimize

from ._log import get_logger
from .config.base import PhysicalUnits
from .errors import InvalidEnergyError, SpectrumIndexError, UnboundEnergyError, WKBSolverError

logger = get_logger(__name__)

Matching = Literal[0.25, 0.5]

_MAX_STEPS = 200
_QUAD = dict(epsabs=1e-13, epsrel=1e-12, limit=200)


class Potential1D(BaseModel):
    """A confining 1D potential and its WKB matching coefficients.

    ``minimum`` is a point inside the well (any point where V is below the
    energies of interest); turning points are searched outward from it with
    steps starting at ``search_step``. A hard wall at a finite domain edge is a
    turning point by itself; a soft edge where V stays below E (r = 0 for a
    radial problem without centrifugal term) is treated the same way.
    """
    model_config = ConfigDict(frozen=True, extra='forbid', arbitrary_types_allowed=True)

    V: Callable[[float], float]
    domain: tuple[float, float] = (-math.inf, math.inf)
    hard_walls: tuple[bool, bool] = (False, False)
    c_left: Matching = 0.25
    c_right: Matching = 0.25
    minimum: Optional[float] = None
    search_step: float = Field(0.5, gt=0)
    units: PhysicalUnits = Field(default_factory=PhysicalUnits)

    @model_validator(mode="after")
    def _check(self) -> Potential1D:
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError(f"domain must be increasing, got {self.domain}")
        for finite, wall, side in ((lo, self.hard_walls[0], "left"), (hi, self.hard_walls[1], "right")):
            if wall and not math.isfinite(finite):
                raise ValueError(f"a hard wall on the {side} needs a finite domain edge")
        if self.minimum is not None and not lo < self.minimum < hi:
            raise ValueError(f"minimum {self.minimum} lies outside the domain {self.domain}")
        return self

    @classmethod
    def harmonic(cls, omega: float, units: Optional[PhysicalUnits] = None) -> Potential1D:
        units = units or PhysicalUnits()
        k = units.mu * omega * omega
        return cls(V=lambda x: 0.5 * k * x * x, minimum=0.0, units=units)

    @classmethod
    def infinite_well(cls, a: float = 1.0, units: Optional[PhysicalUnits] = None) -> Potential1D:
        return cls(
            V=lambda x: 0.0,
            domain=(0.0, a),
            hard_walls=(True, True),
            c_left=0.5,
            c_right=0.5,
            units=units or PhysicalUnits(),
        )

    @property
    def centre(self) -> float:
        if self.minimum is not None:
            return self.minimum
        lo, hi = self.domain
        if math.isfinite(lo) and math.isfinite(hi):
            return 0.5 * (lo + hi)
        if math.isfinite(lo):
            return lo + self.search_step
        if math.isfinite(hi):
            return hi - self.search_step
        return 0.0

    @property
    def floor(self) -> float:
        return float(self.V(self.centre))

    def _turning_point(self, energy: float, side: int) -> float:
        edge = self.domain[0] if side < 0 else self.domain[1]
        wall = self.hard_walls[0] if side < 0 else self.hard_walls[1]
        if wall:
            return edge
        inside = self.centre
        step = self.search_step
        for _ in range(_MAX_STEPS):
            x = inside + side * step
            if (side < 0 and x <= edge) or (side > 0 and x >= edge):
                x = 0.5 * (inside + edge)
                if abs(x - edge) <= 1e-15 * max(1.0, abs(edge)):
                    return edge
            if self.V(x) >= energy:
                lo, hi = (x, inside) if side < 0 else (inside, x)
                return optimize.brentq(lambda s: self.V(s) - energy, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps)
            inside = x
            step *= 2.0
        if math.isfinite(edge):
            return edge
        raise UnboundEnergyError(energy, "left" if side < 0 else "right")

    def turning_points(self, energy: float) -> tuple[float, float]:
        """(a, b) with E > V on (a, b).

        Raises:
            InvalidEnergyError: If E does not exceed V at the well centre.
            UnboundEnergyError: If the motion escapes to infinity.
        """
        if not energy > self.floor:
            raise InvalidEnergyError(energy, self.floor)
        return self._turning_point(energy, -1), self._turning_point(energy, 1)

    def _split_integral(self, energy: float, integrand: Callable[[float], float]) -> float:
        """∫_a^b g(E − V(x)) dx with square-root substitutions at both ends."""
        a, b = self.turning_points(energy)
        mid = 0.5 * (a + b)
        half = math.sqrt(mid - a)

        def left(s: float) -> float:
            return 2.0 * s * integrand(energy - self.V(a + s * s))

        def right(s: float) -> float:
            return 2.0 * s * integrand(energy - self.V(b - s * s))

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            first, _ = integrate.quad(left, 0.0, half, **_QUAD)
            second, _ = integrate.quad(right, 0.0, half, **_QUAD)
        return first + second


def _inverse_root(gap: float) -> float:
    return 1.0 / math.sqrt(gap) if gap > 0.0 else 0.0


def _root(gap: float) -> float:
    return math.sqrt(gap) if gap > 0.0 else 0.0


def classical_period(potential: Potential1D, energy: float) -> float:
    """τ = 2√(μ/2)·∫ dx/√(E − V) over one cycle."""
    integral = potential._split_integral(energy, _inverse_root)
    return 2.0 * math.sqrt(potential.units.mu / 2.0) * integral


def action(potential: Potential1D, energy: float) -> float:
    """√(2μ)·∫ √(E − V) dx between the turning points."""
    return math.sqrt(2.0 * potential.units.mu) * potential._split_integral(energy, _root)


def wkb_energies(potential: Potential1D, n_max: int) -> list[float]:
    """E_n, n = 0..n_max, from √(2μ)∫√(E_n − V) dx = (n + C_L + C_R)πħ.

    Raises:
        WKBSolverError: If a level cannot be bracketed or the action fails to grow.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    hbar = potential.units.hbar
    shift = potential.c_left + potential.c_right
    floor = potential.floor
    energies: list[float] = []
    e_lo = floor + 1e-12 * max(1.0, abs(floor))
    span = 1.0
    for n in range(n_max + 1):
        target = (n + shift) * math.pi * hbar

        def residual(e: float, target: float = target) -> float:
            return action(potential, e) - target

        e_hi = e_lo + span
        for _ in range(_MAX_STEPS):
            if residual(e_hi) > 0.0:
                break
            width = e_hi - e_lo
            e_lo, e_hi = e_hi, e_hi + 2.0 * width
        else:
            raise WKBSolverError(n, "could not bracket the action")
        try:
            energy = optimize.brentq(residual, e_lo, e_hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
        except ValueError as exc:
            raise WKBSolverError(n, str(exc)) from exc
        if energies and not energy > energies[-1]:
            raise WKBSolverError(n, "action is not monotone in the energy")
        miss = abs(residual(energy)) / math.sqrt(2.0 * potential.units.mu)
        if miss > 1e-9 * max(1.0, target):
            raise WKBSolverError(n, f"action residual {miss:.3e}")
        logger.debug(f"WKB level {n}: E={energy!r}")
        energies.append(energy)
        span = max(energy - e_lo, 1e-12)
        e_lo = energy
    return energies


def period_from_spectrum(energies: Sequence[float], n0: int, hbar: float = 1.0) -> float:
    """2πħ/|dE/dn| at n0 from a central difference.

    Raises:
        SpectrumIndexError: If n0 is the first or last level.
    """
    size = len(energies)
    if n0 < 1 or n0 > size - 2:
        raise SpectrumIndexError(n0, size)
    slope = 0.5 * (energies[n0 + 1] - energies[n0 - 1])
    if slope == 0:
        return math.inf
    return 2.0 * math.pi * hbar / abs(slope)
