"""The 1D infinite well on (d, d + a)."""
from __future__ import annotations

import math
from typing import ClassVar, Literal, Optional, Union

import numpy as np
from pydantic import Field

from .._log import get_logger
from ..common.enums import Geometry, OverlapKind
from ..config.packets import GaussianPacket1D
from ..config.scenario import WindowSpec
from ..core.evolution import EigenBasis
from ..core.spectrum import Expansion, SpectralLine
from ..core.timescales import TimeScales, time_scales
from ..special.overlap import gaussian_trig_overlap
from ..special.quadrature import fourier_integral
from .base import Billiard, check_quantum_number

logger = get_logger(__name__)

Method = Literal["closed_form", "exact", "momentum"]

# Gaussian envelopes are cut at this many widths b
_ENVELOPE_CUTOFF = 14.0


class Well1D(Billiard):
    kind: ClassVar[Geometry] = Geometry.WELL1D

    a: float = Field(1.0, gt=0, description="Width")
    d: float = Field(0.0, description="Left edge")

    @property
    def ground_energy(self) -> float:
        """E0 = ħ²π²/2μa²."""
        return (self.units.hbar * math.pi / self.a) ** 2 / (2.0 * self.units.mu)

    def energy_formula(self, n: float) -> float:
        return n * n * self.ground_energy

    def energy(self, n: int) -> float:
        n = check_quantum_number("n", n)
        return self.energy_formula(n)

    def eigenfunction(self, n: int, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """√(2/a)·sin(nπ(x-d)/a) inside the well, zero outside."""
        n = check_quantum_number("n", n)
        xs = np.asarray(x, dtype=float)
        u = xs - self.d
        inside = (u > 0.0) & (u < self.a)
        values = np.where(inside, math.sqrt(2.0 / self.a) * np.sin(n * math.pi * u / self.a), 0.0)
        return float(values) if values.ndim == 0 else values

    def momentum_eigenfunction(self, n: int, p: Union[float, np.ndarray]) -> Union[complex, np.ndarray]:
        """Fourier transform φ_n(p) of the eigenfunction, including the exp(-ipd/ħ) shift."""
        n = check_quantum_number("n", n)
        ps = np.asarray(p, dtype=float)
        value = self._momentum_prefactor(n) * self._momentum_envelope(n, ps) * np.exp(
            -1j * ps * (0.5 * self.a + self.d) / self.units.hbar
        )
        return complex(value) if value.ndim == 0 else value

    def _momentum_prefactor(self, n: int) -> complex:
        return -1j * (1j ** (n % 4)) * self.a / math.sqrt(4.0 * math.pi * self.units.hbar * self.a)

    def _momentum_envelope(self, n: int, p: np.ndarray) -> np.ndarray:
        # sin(u/2)/(u/2) == np.sinc(u/2π)
        u = p * self.a / self.units.hbar
        minus = np.sinc((n * math.pi - u) / (2.0 * math.pi))
        plus = np.sinc((n * math.pi + u) / (2.0 * math.pi))
        return minus + plus if n % 2 else minus - plus

    def n_window(self, packet: GaussianPacket1D) -> tuple[int, float]:
        """(n_center, delta_n) = (round(|p0|a/πħ) ≥ 1, a/2πΔx0)."""
        centre = max(1, int(round(abs(packet.p0) * self.a / (math.pi * self.units.hbar))))
        return centre, self.a / (2.0 * math.pi * packet.dx0)

    def window_range(self, packet: GaussianPacket1D, window: Optional[WindowSpec] = None) -> range:
        window = window or WindowSpec()
        centre, spread = self.n_window(packet)
        lo = max(1, int(math.floor(centre - window.n_sigma * spread)))
        hi = max(lo, int(math.ceil(centre + window.n_sigma * spread)))
        if window.n_min is not None:
            lo = window.n_min
        if window.n_max is not None:
            hi = window.n_max
        return range(lo, hi + 1)

    def _lines(self, ns: range) -> tuple[SpectralLine, ...]:
        return tuple(self.line((n,), self.energy_formula(n)) for n in ns)

    def _range(self, n_max: int, n_min: int) -> range:
        n_min = check_quantum_number("n_min", n_min)
        n_max = check_quantum_number("n_max", n_max)
        if n_max < n_min:
            raise ValueError(f"n_max ({n_max}) must be >= n_min ({n_min})")
        return range(n_min, n_max + 1)

    def closed_form_amplitudes(self, packet: GaussianPacket1D, ns: np.ndarray) -> np.ndarray:
        """ã_n for an array of n, overlapping the packet with sin(nπ(x-d)/a) on the whole line."""
        kappa = np.asarray(ns, dtype=float) * math.pi / self.a
        overlap = gaussian_trig_overlap(OverlapKind.SIN, kappa, packet.x0 - self.d, packet.p0, packet.b, self.units.hbar)
        norm = math.sqrt(2.0 / self.a) / math.sqrt(packet.b * math.sqrt(math.pi))
        return norm * np.asarray(overlap)

    def coefficients_closed_form(self, packet: GaussianPacket1D, n_max: int, n_min: int = 1) -> Expansion:
        ns = self._range(n_max, n_min)
        self.check_margin(packet)
        coeffs = self.closed_form_amplitudes(packet, np.arange(ns.start, ns.stop))
        return Expansion(self._lines(ns), coeffs, self.units.hbar)

    def coefficients_exact(
        self, packet: GaussianPacket1D, n_max: int, n_min: int = 1, tolerance: float = 1e-9
    ) -> Expansion:
        """Overlaps over the well interior by adaptive oscillatory quadrature.

        Valid for any packet position, including packets straddling or outside
        the walls.

        Raises:
            AccuracyError: If a quadrature error estimate exceeds ``tolerance``.
        """
        ns = self._range(n_max, n_min)
        x0, b, q = packet.x0, packet.b, packet.p0 / self.units.hbar
        lo = max(self.d, x0 - _ENVELOPE_CUTOFF * b)
        hi = min(self.d + self.a, x0 + _ENVELOPE_CUTOFF * b)
        norm = math.sqrt(2.0 / self.a) / math.sqrt(b * math.sqrt(math.pi))

        def envelope(x: float) -> float:
            return math.exp(-0.5 * ((x - x0) / b) ** 2)

        coeffs = np.zeros(len(ns), dtype=complex)
        if hi > lo:
            for i, n in enumerate(ns):
                k = n * math.pi / self.a
                forward = fourier_integral(envelope, k + q, lo, hi, tolerance)
                backward = fourier_integral(envelope, q - k, lo, hi, tolerance)
                coeffs[i] = norm / 2j * (
                    np.exp(-1j * (k * self.d + q * x0)) * forward - np.exp(1j * (k * self.d - q * x0)) * backward
                )
        else:
            logger.info(f"packet at x0={x0} does not overlap the well; all coefficients vanish")
        return Expansion(self._lines(ns), coeffs, self.units.hbar)

    def coefficients_momentum_space(
        self, packet: GaussianPacket1D, n_max: int, n_min: int = 1, tolerance: float = 1e-9
    ) -> Expansion:
        """Overlaps ∫ φ_n*(p)·φ_G(p) dp evaluated in momentum space."""
        ns = self._range(n_max, n_min)
        hbar = self.units.hbar
        alpha = packet.b / hbar
        lo = packet.p0 - _ENVELOPE_CUTOFF / alpha
        hi = packet.p0 + _ENVELOPE_CUTOFF / alpha
        gauss_norm = math.sqrt(alpha / math.sqrt(math.pi))
        omega = (0.5 * self.a + self.d - packet.x0) / hbar

        coeffs = np.zeros(len(ns), dtype=complex)
        for i, n in enumerate(ns):

            def envelope(p: float, n: int = n) -> float:
                g = gauss_norm * math.exp(-0.5 * (alpha * (p - packet.p0)) ** 2)
                return float(self._momentum_envelope(n, np.asarray(p))) * g

            integral = fourier_integral(envelope, omega, lo, hi, tolerance)
            coeffs[i] = np.conj(self._momentum_prefactor(n)) * integral
        return Expansion(self._lines(ns), coeffs, hbar)

    def expand(
        self, packet: GaussianPacket1D, window: Optional[WindowSpec] = None, method: Method = "closed_form"
    ) -> Expansion:
        ns = self.window_range(packet, window)
        logger.debug(f"well1d window n={ns.start}..{ns.stop - 1} ({method})")
        if method == "closed_form":
            return self.coefficients_closed_form(packet, ns.stop - 1, ns.start)
        if method == "exact":
            return self.coefficients_exact(packet, ns.stop - 1, ns.start)
        if method == "momentum":
            return self.coefficients_momentum_space(packet, ns.stop - 1, ns.start)
        raise ValueError(f"unknown coefficient method {method!r}")

    def basis(self) -> EigenBasis:
        return EigenBasis(self.tag, lambda line, x: np.asarray(self.eigenfunction(line.quantum_numbers[0], x)))

    def revival_time(self) -> float:
        """4μa²/πħ."""
        return 4.0 * self.units.mu * self.a ** 2 / (math.pi * self.units.hbar)

    def classical_period(self, n: int) -> float:
        """2a/v_n with v_n = nπħ/μa."""
        n = check_quantum_number("n", n)
        return 2.0 * self.units.mu * self.a ** 2 / (n * math.pi * self.units.hbar)

    def tau(self, packet: GaussianPacket1D) -> float:
        if packet.p0 == 0:
            return math.inf
        return 2.0 * self.a * self.units.mu / abs(packet.p0)

    def time_scales(self, packet: GaussianPacket1D) -> TimeScales:
        centre, _ = self.n_window(packet)
        return time_scales(self.energy_formula, (centre,), self.units, ("n",), packet)

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        return list(self._lines(range(1, count + 1)))

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((self.d, self.d + self.a),)

    def wall_margin(self, packet: GaussianPacket1D) -> float:
        return min(packet.x0 - self.d, self.d + self.a - packet.x0)
