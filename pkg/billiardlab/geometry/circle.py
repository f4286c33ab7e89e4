"""Circular billiard of radius R centred at the origin, and its half-disk fold."""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import ClassVar, NamedTuple, Optional, Union

import numpy as np
from pydantic import Field
from scipy import optimize, special

from .._log import get_logger
from ..common.enums import Geometry
from ..config.packets import GaussianPacket2D
from ..config.scenario import WindowSpec
from ..core.evolution import EigenBasis
from ..core.moments import angular_momentum_moments, gaussian_2d, packet_energy_2d
from ..core.spectrum import Expansion, SpectralLine
from ..core.timescales import TimeScales, time_scales
from ..errors import AccuracyError, InvalidEnergyError, NumericalError, OutsideDomainError, QuantumNumberError
from ..special.bessel import MAX_ORDER, MAX_RADIAL_INDEX, BesselZeroTable, bessel_zero, bessel_zeros
from ..special.quadrature import gauss_legendre, radial_converged
from ..wkb import Potential1D
from .base import Billiard, check_quantum_number
from .orbits import ClosedOrbit, repetitions

logger = get_logger(__name__)

# relative agreement required between the packet norm on a grid and on the doubled grid
GRID_TOLERANCE = 1e-8
ZERO_TOLERANCE = 1e-10
# largest p listed for the circle's infinite (p, q) families
ORBIT_P_MAX = 13

StateWindow = Union[WindowSpec, Iterable[tuple[int, int]], None]


@dataclass(frozen=True)
class CircState:
    """Eigenstate (m, n_r) with Bessel zero z = z(|m|, n_r), wavenumber k = z/R and radial norm N."""
    m: int
    n_r: int
    z: float
    k: float
    energy: float
    norm: float


class WKBResidual(NamedTuple):
    residual: float
    n_r: int


def wkb_phase(z: Union[float, np.ndarray], m: int) -> Union[float, np.ndarray]:
    """√(z² − m²) − |m|·arccos(|m|/z), the radial action over ħ."""
    m = abs(m)
    z = np.asarray(z, dtype=float)
    if m == 0:
        value = z
    else:
        value = np.sqrt(z * z - m * m) - m * np.arccos(m / z)
    return float(value) if value.ndim == 0 else value


def wkb_zero(m: int, n_r: int) -> float:
    """z solving √(z² − m²) − |m|·arccos(|m|/z) = (n_r + 3/4)π."""
    n_r = check_quantum_number("n_r", n_r, 0)
    m = abs(int(m))
    target = (n_r + 0.75) * math.pi
    if m == 0:
        return target
    lo = float(m)
    hi = lo + target + math.pi
    while wkb_phase(hi, m) < target:
        hi += target + math.pi
    return optimize.brentq(lambda z: wkb_phase(z, m) - target, lo, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps)


class CircBilliard(Billiard):
    kind: ClassVar[Geometry] = Geometry.CIRCLE

    R: float = Field(1.0, gt=0, description="Radius")

    def energy_of(self, z: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """ħ²z²/2μR²."""
        return (self.units.hbar * np.asarray(z) / self.R) ** 2 / (2.0 * self.units.mu)

    def z_of(self, energy: float) -> float:
        return self.R * math.sqrt(2.0 * self.units.mu * energy) / self.units.hbar

    def normalization(self, m: int, z: float) -> float:
        """N = √2/(R·|J_{|m|+1}(z)|), valid only when z is a zero of J_|m|.

        Raises:
            NumericalError: If |J_|m|(z)| exceeds 1e-10.
        """
        m = abs(int(m))
        residual = abs(special.jv(m, z))
        if residual > ZERO_TOLERANCE:
            raise NumericalError(f"z={z!r} is not a zero of J_{m}: |J(z)| = {residual:.3e}")
        return math.sqrt(2.0) / (self.R * abs(special.jv(m + 1, z)))

    def normalization_residual(self, state: CircState) -> float:
        """|N²·∫₀^R r·J_|m|(zr/R)² dr − 1| by converged Gauss–Legendre quadrature."""
        m, z = abs(state.m), state.z

        def integrand(r):
            return r * special.jv(m, z * r / self.R) ** 2

        value, _, _ = radial_converged(integrand, self.R, order=max(32, int(z) + 16))
        return abs(state.norm ** 2 * value - 1.0)

    def _make_state(self, m: int, n_r: int, z: float) -> CircState:
        return CircState(m, n_r, z, z / self.R, float(self.energy_of(z)), self.normalization(m, z))

    def state(self, m: int, n_r: int) -> CircState:
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
            raise QuantumNumberError("m", m, "integer")
        n_r = check_quantum_number("n_r", n_r, 0)
        return self._make_state(int(m), n_r, bessel_zero(abs(int(m)), n_r))

    def spectrum(self, m_max: int, nr_max: int) -> list[CircState]:
        """States for −m_max ≤ m ≤ m_max and 0 ≤ n_r ≤ nr_max, ordered by m then n_r."""
        table = BesselZeroTable.build(m_max, nr_max)
        return [
            self._make_state(m, n_r, table.zero(m, n_r))
            for m in range(-m_max, m_max + 1)
            for n_r in range(nr_max + 1)
        ]

    def eigenfunction(self, state: CircState, r, theta):
        """N·J_|m|(zr/R)·exp(imθ)/√(2π).

        Raises:
            OutsideDomainError: If any r exceeds R.
        """
        r = np.asarray(r, dtype=float)
        if np.any(r > self.R * (1.0 + 1e-12)) or np.any(r < 0.0):
            raise OutsideDomainError(float(np.max(r)), f"radius must lie in [0, {self.R}]")
        value = self.radial_profile(state, r) * np.exp(1j * state.m * np.asarray(theta)) / math.sqrt(2.0 * math.pi)
        return complex(value) if np.ndim(value) == 0 else value

    def radial_profile(self, state: CircState, r):
        return state.norm * special.jv(abs(state.m), state.z * np.asarray(r, dtype=float) / self.R)

    def m_window(self, packet: GaussianPacket2D) -> tuple[int, float]:
        """(round(⟨L_z⟩/ħ), ΔL_z/ħ)."""
        moments = angular_momentum_moments(packet, self.units)
        hbar = self.units.hbar
        return int(round(moments.mean / hbar)), moments.spread / hbar

    def z_shell(self, packet: GaussianPacket2D, n_sigma: float = 6.0) -> tuple[float, float]:
        """Centre and half-width in z of the packet's energy shell."""
        z_peak = self.z_of(packet_energy_2d(packet, self.units))
        dp = self.units.hbar / (math.sqrt(2.0) * packet.b)
        return z_peak, n_sigma * self.R * dp / self.units.hbar

    def default_window(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> list[tuple[int, int]]:
        """(m, n_r) pairs inside the angular-momentum window and the energy shell."""
        window = window or WindowSpec()
        m_centre, dm = self.m_window(packet)
        half = int(math.ceil(window.n_sigma * dm))
        m_cap = MAX_ORDER if window.m_max is None else window.m_max
        m_lo = max(-m_cap, m_centre - half)
        m_hi = min(m_cap, m_centre + half)
        if m_lo > m_hi:
            logger.warning(f"angular window {m_centre}±{half} lies beyond |m| <= {m_cap}")
            return []
        z_peak, dz = self.z_shell(packet, window.n_sigma)
        z_lo, z_hi = z_peak - dz, z_peak + dz
        pairs = []
        for m in range(m_lo, m_hi + 1):
            count = min(int(z_hi / math.pi) + 2, MAX_RADIAL_INDEX)
            if window.nr_max is not None:
                count = min(count, window.nr_max + 1)
            zeros = bessel_zeros(abs(m), count)
            for n_r, z in enumerate(zeros.tolist()):
                if z_lo <= z <= z_hi:
                    pairs.append((m, n_r))
        logger.debug(f"circle window: m in [{m_lo}, {m_hi}], z in [{z_lo:.4g}, {z_hi:.4g}], {len(pairs)} states")
        return pairs

    def _grid(self, packet: GaussianPacket2D, order: int, n_theta: int):
        r, w = gauss_legendre(order, 0.0, self.R)
        theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
        x = np.outer(r, np.cos(theta))
        y = np.outer(r, np.sin(theta))
        psi = gaussian_2d(packet, x, y, self.units)
        return r, w, psi

    def _grid_norm(self, packet: GaussianPacket2D, order: int, n_theta: int) -> float:
        r, w, psi = self._grid(packet, order, n_theta)
        return float(np.dot(w * r, np.sum(np.abs(psi) ** 2, axis=1)) * 2.0 * math.pi / n_theta)

    def quadrature_resolution(self, packet: GaussianPacket2D, m_max: int, nr_max: int, z_max: float) -> tuple[int, int]:
        """(radial order, angular points) for a window reaching |m| = m_max and z = z_max."""
        k_max = packet.p0 / self.units.hbar + 10.0 / packet.b
        order = max(2 * nr_max + 32, int(math.ceil(1.5 * z_max)) + 64, int(math.ceil(0.75 * self.R * k_max)) + 64)
        n_theta = max(8 * (m_max + 1), int(math.ceil(4.0 * self.R * k_max)), 64)
        n_theta += n_theta % 2
        return order, n_theta

    def coefficients(self, packet: GaussianPacket2D, window: StateWindow = None) -> Expansion:
        """⟨w(m, n_r)|ψ⟩ by radial Gauss–Legendre quadrature times an angular FFT.

        ``window`` is a :class:`WindowSpec` (automatic selection) or an explicit
        collection of (m, n_r) pairs.

        Raises:
            AccuracyError: If the packet norm changes by more than 1e-8 when
                both grids are doubled.
        """
        self.check_margin(packet)
        if window is None or isinstance(window, WindowSpec):
            pairs = self.default_window(packet, window)
        else:
            pairs = sorted({(int(m), int(n)) for m, n in window})
        if not pairs:
            return Expansion((), np.zeros(0, dtype=complex), self.units.hbar)

        by_m: dict[int, list[int]] = {}
        for m, n_r in pairs:
            by_m.setdefault(m, []).append(n_r)
        states = {
            m: [self._make_state(m, n_r, z) for n_r, z in zip(nrs, bessel_zeros(abs(m), max(nrs) + 1)[nrs])]
            for m, nrs in by_m.items()
        }
        m_max = max(abs(m) for m in by_m)
        nr_max = max(max(nrs) for nrs in by_m.values())
        z_max = max(s.z for group in states.values() for s in group)
        order, n_theta = self.quadrature_resolution(packet, m_max, nr_max, z_max)

        coarse = self._grid_norm(packet, order, n_theta)
        fine = self._grid_norm(packet, 2 * order, 2 * n_theta)
        change = abs(fine - coarse) / max(fine, 1e-300)
        if change > GRID_TOLERANCE:
            raise AccuracyError("polar packet quadrature", change, GRID_TOLERANCE, f"order {order}, {n_theta} angles")
        logger.debug(f"circle quadrature: order {order}, {n_theta} angles, norm {coarse:.12f}")

        r, w, psi = self._grid(packet, order, n_theta)
        # harmonics[j, m] = ∫ψ(r_j, θ)·exp(-imθ) dθ/√(2π)
        harmonics = np.fft.fft(psi, axis=1) * math.sqrt(2.0 * math.pi) / n_theta
        weights = w * r

        lines, coeffs = [], []
        for m in sorted(states):
            group = states[m]
            zs = np.array([s.z for s in group])
            norms = np.array([s.norm for s in group])
            radial = special.jv(abs(m), np.outer(zs, r / self.R))
            values = norms * (radial @ (weights * harmonics[:, m % n_theta]))
            for s, value in zip(group, values):
                lines.append(self.line((s.m, s.n_r), s.energy))
                coeffs.append(value)
        return Expansion(tuple(lines), np.array(coeffs, dtype=complex), self.units.hbar)

    def expand(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        return self.coefficients(packet, window)

    def basis(self) -> EigenBasis:
        def evaluate(line: SpectralLine, points: np.ndarray) -> np.ndarray:
            m, n_r = line.quantum_numbers
            state = self.state(m, n_r)
            r = np.hypot(points[:, 0], points[:, 1])
            theta = np.arctan2(points[:, 1], points[:, 0])
            inside = r <= self.R
            values = self.radial_profile(state, np.minimum(r, self.R)) * np.exp(1j * m * theta) / math.sqrt(2.0 * math.pi)
            return np.where(inside, values, 0.0)

        return EigenBasis(self.tag, evaluate)

    def wkb_residual(self, energy: float, m: int) -> WKBResidual:
        """Distance of the radial action from the nearest (n_r + 3/4)π.

        Raises:
            InvalidEnergyError: If E does not exceed the centrifugal floor m²ħ²/2μR².
        """
        floor = float(self.energy_of(abs(m)))
        if not energy > floor:
            raise InvalidEnergyError(energy, floor, "R_min would exceed R")
        phase = wkb_phase(self.z_of(energy), m)
        n_r = max(0, int(round(phase / math.pi - 0.75)))
        return WKBResidual(phase - (n_r + 0.75) * math.pi, n_r)

    def wkb_energy(self, m: int, n_r: int) -> float:
        return float(self.energy_of(wkb_zero(m, n_r)))

    def r_min(self, energy: float, m: int) -> float:
        """Closest approach |m|ħ/√(2μE) = |m|R/z."""
        return abs(m) * self.units.hbar / math.sqrt(2.0 * self.units.mu * energy)

    def half_circle_view(self) -> HalfCircle:
        return HalfCircle(R=self.R, units=self.units)

    def revival_time(self) -> None:
        return None

    def tau(self, packet: GaussianPacket2D) -> float:
        """R/v0."""
        v0 = packet.p0 / self.units.mu
        return math.inf if v0 == 0 else self.R / v0

    def _smooth_energy(self, m: float, n_r: float) -> float:
        return float(self.energy_of(wkb_zero(int(m), max(0, int(n_r)))))

    def window_centre(self, packet: GaussianPacket2D) -> tuple[int, int]:
        m_centre, _ = self.m_window(packet)
        z_peak, _ = self.z_shell(packet)
        if z_peak <= abs(m_centre):
            return m_centre, 2
        n_r = int(round(wkb_phase(z_peak, m_centre) / math.pi - 0.75))
        return m_centre, max(2, n_r)

    def time_scales(self, packet: GaussianPacket2D) -> TimeScales:
        """Semiclassical scales from the WKB spectrum about the packet's (m, n_r)."""
        return time_scales(self._smooth_energy, self.window_centre(packet), self.units, ("m", "n_r"), packet)

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        states = self.spectrum(count, count)
        states.sort(key=lambda s: (s.energy, s.m, s.n_r))
        return [self.line((s.m, s.n_r), s.energy) for s in states[:count]]

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((-self.R, self.R), (-self.R, self.R))

    def wall_margin(self, packet: GaussianPacket2D) -> float:
        return self.R - math.hypot(packet.x0, packet.y0)


class HalfCircle(Billiard):
    """Half-disk y > 0 with states N·J_m(zr/R)·√(2/π)·sin(mθ), m ≥ 1."""
    kind: ClassVar[Geometry] = Geometry.HALFCIRCLE

    R: float = Field(1.0, gt=0)

    @property
    def parent(self) -> CircBilliard:
        return CircBilliard(R=self.R, units=self.units)

    def state(self, m: int, n_r: int) -> CircState:
        m = check_quantum_number("m", m)
        return self.parent.state(m, n_r)

    def eigenfunction(self, state: CircState, r, theta):
        r = np.asarray(r, dtype=float)
        theta = np.asarray(theta, dtype=float)
        if np.any(r > self.R * (1.0 + 1e-12)) or np.any(r < 0.0):
            raise OutsideDomainError(float(np.max(r)), f"radius must lie in [0, {self.R}]")
        angular = math.sqrt(2.0 / math.pi) * np.sin(state.m * theta)
        values = self.parent.radial_profile(state, r) * angular
        return np.where(np.sin(theta) >= 0.0, values, 0.0)

    def coefficients(self, packet: GaussianPacket2D, window: StateWindow = None) -> Expansion:
        """b(m, n_r) = i·(a(m, n_r) − a(−m, n_r)) from the full-disk coefficients."""
        self.check_margin(packet)
        parent = self.parent
        if window is None or isinstance(window, WindowSpec):
            pairs = parent.default_window(packet, window)
        else:
            pairs = list(window)
        folded = sorted({(abs(int(m)), int(n)) for m, n in pairs if m != 0})
        if not folded:
            return Expansion((), np.zeros(0, dtype=complex), self.units.hbar)
        both = [(m, n) for m, n in folded] + [(-m, n) for m, n in folded]
        full = parent.coefficients(packet, both)
        lookup = {line.quantum_numbers: (line, c) for line, c in full.terms}
        lines, coeffs = [], []
        for m, n_r in folded:
            line, plus = lookup[(m, n_r)]
            _, minus = lookup[(-m, n_r)]
            lines.append(self.line((m, n_r), line.energy))
            coeffs.append(1j * (plus - minus))
        return Expansion(tuple(lines), np.array(coeffs, dtype=complex), self.units.hbar)

    def expand(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        return self.coefficients(packet, window)

    def basis(self) -> EigenBasis:
        def evaluate(line: SpectralLine, points: np.ndarray) -> np.ndarray:
            state = self.state(*line.quantum_numbers)
            r = np.hypot(points[:, 0], points[:, 1])
            theta = np.arctan2(points[:, 1], points[:, 0])
            inside = (r <= self.R) & (points[:, 1] > 0.0)
            values = self.parent.radial_profile(state, np.minimum(r, self.R)) * math.sqrt(2.0 / math.pi) * np.sin(
                state.m * theta
            )
            return np.where(inside, values, 0.0)

        return EigenBasis(self.tag, evaluate)

    def revival_time(self) -> None:
        return None

    def tau(self, packet: GaussianPacket2D) -> float:
        return self.parent.tau(packet)

    def time_scales(self, packet: GaussianPacket2D) -> TimeScales:
        return self.parent.time_scales(packet)

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        states = [s for s in self.parent.spectrum(count, count) if s.m >= 1]
        states.sort(key=lambda s: (s.energy, s.m, s.n_r))
        return [self.line((s.m, s.n_r), s.energy) for s in states[:count]]

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((-self.R, self.R), (0.0, self.R))

    def wall_margin(self, packet: GaussianPacket2D) -> float:
        return min(self.R - math.hypot(packet.x0, packet.y0), packet.y0)


def closed_orbits(max_length_over_R: float, p_max: int = ORBIT_P_MAX) -> list[ClosedOrbit]:
    """Closed orbits (p, q) with p ≥ 2q ≥ 2 and L/R = 2p·sin(πq/p) below the bound.

    L grows with p towards 2πq. A family whose limit 2πq lies above the bound is
    listed in full. Any other family is infinite: it is cut at ``p_max`` and, when
    2πq is below the bound, closed by a whispering-gallery limit row (p → ∞,
    R_min/R = 1). Non-primitive pairs (gcd > 1) retrace a shorter orbit and are
    flagged ``primitive=False``. Periods are in units of τ = R/v0, so
    ``period_over_tau`` equals L/R.

    Args:
        max_length_over_R: Exclusive bound on L/R.
        p_max: Largest p listed for the infinite families.
    """
    if not max_length_over_R > 0:
        raise ValueError(f"bound must be positive, got {max_length_over_R}")
    if p_max < 2:
        raise ValueError(f"p_max must be at least 2, got {p_max}")
    orbits = []
    q = 1
    # the shortest (p, q) orbit is the diameter path p = 2q with L = 4qR
    while 4.0 * q < max_length_over_R:
        limit = 2.0 * math.pi * q
        infinite = limit <= max_length_over_R
        p = 2 * q
        while not (infinite and p > p_max):
            length = 2.0 * p * math.sin(math.pi * q / p)
            if length >= max_length_over_R:
                break
            orbits.append(
                ClosedOrbit(
                    p=p,
                    q=q,
                    length=length,
                    period_over_tau=length,
                    launch=math.cos(math.pi * q / p),
                    recurrences=repetitions(length, max_length_over_R, inclusive=False),
                    primitive=math.gcd(p, q) == 1,
                )
            )
            p += 1
        if limit < max_length_over_R:
            orbits.append(
                ClosedOrbit(
                    p=None,
                    q=q,
                    length=limit,
                    period_over_tau=limit,
                    launch=1.0,
                    recurrences=repetitions(limit, max_length_over_R, inclusive=False),
                    primitive=q == 1,
                    limit=True,
                )
            )
        q += 1
    return orbits


def circle_radial_potential(billiard: CircBilliard, m: int) -> Potential1D:
    """Centrifugal potential m²ħ²/2μr² on (0, R) with a hard wall at R.

    Matching coefficients are 1/4 at the smooth inner turning point and 1/2 at
    the wall, so the toolkit's quantization reproduces :func:`wkb_zero`.
    """
    units = billiard.units
    strength = m * m * units.hbar ** 2 / (2.0 * units.mu)
    R = billiard.R
    return Potential1D(
        V=lambda r: strength / (r * r),
        domain=(0.0, R),
        hard_walls=(False, True),
        c_left=0.25,
        c_right=0.5,
        minimum=R * (1.0 - 1e-9),
        search_step=R / 64.0,
        units=units,
    )
