"""Equilateral-triangle billiard with vertices (0,0), (a/2, √3a/2), (−a/2, √3a/2).

Each eigenstate is a sum of three products trig(A_i x)·sin(B_i y) whose
wavevectors (A_i, B_i) for a label (m, n) with m ≥ 2n ≥ 2 are

    A1 = 2π(2m−n)/3a   B1 = 2πn/√3a
    A2 = 2π(2n−m)/3a   B2 = 2πm/√3a
    A3 = 2π(m+n)/3a    B3 = 2π(m−n)/√3a

w⁻ uses sin(A_i x) with signs (+, −, −), w⁺ uses cos(A_i x) with signs
(+, −, +), and w⁰(2n, n) = w⁺(2n, n)/√2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Optional

import numpy as np
from pydantic import Field

from .._log import get_logger
from ..common.enums import Geometry, OverlapKind, Parity
from ..config.packets import GaussianPacket2D
from ..config.scenario import WindowSpec
from ..core.evolution import EigenBasis
from ..core.spectrum import Expansion, SpectralLine
from ..core.timescales import TimeScales, time_scales
from ..errors import QuantumNumberError
from ..special.overlap import gaussian_trig_overlap
from .base import Billiard, check_quantum_number
from .orbits import ClosedOrbit, coprime, repetitions

logger = get_logger(__name__)

SQRT3 = math.sqrt(3.0)
_X_SIGNS = {Parity.MINUS: (1.0, -1.0, -1.0), Parity.PLUS: (1.0, -1.0, 1.0)}


@dataclass(frozen=True)
class TriangleState:
    """Label (m, n) with m ≥ 2n ≥ 2.

    m = 2n carries only the non-degenerate ``zero`` state; m > 2n carries the
    ``minus``/``plus`` pair, odd and even under x → −x.
    """
    m: int
    n: int
    parity: Parity

    def __post_init__(self) -> None:
        check_quantum_number("n", self.n)
        check_quantum_number("m", self.m, 2)
        parity = Parity(self.parity)
        object.__setattr__(self, "parity", parity)
        if self.m < 2 * self.n:
            raise QuantumNumberError("(m, n)", (self.m, self.n), "m >= 2n >= 2")
        if (parity is Parity.ZERO) != (self.m == 2 * self.n):
            raise QuantumNumberError("parity", parity.value, "'zero' exactly when m == 2n, else 'minus' or 'plus'")
        if parity is Parity.NONE:
            raise QuantumNumberError("parity", parity.value, "one of minus, plus, zero")


def _wavevectors(a: float, m, n) -> tuple[tuple, tuple]:
    m = np.asarray(m, dtype=float)
    n = np.asarray(n, dtype=float)
    kx, ky = 2.0 * math.pi / (3.0 * a), 2.0 * math.pi / (SQRT3 * a)
    xs = (kx * (2 * m - n), kx * (2 * n - m), kx * (m + n))
    ys = (ky * n, ky * m, ky * (m - n))
    return xs, ys


class TriangleBilliard(Billiard):
    kind: ClassVar[Geometry] = Geometry.TRIANGLE

    a: float = Field(1.0, gt=0, description="Side length")

    @property
    def height(self) -> float:
        return SQRT3 * self.a / 2.0

    @property
    def norm(self) -> float:
        """√(16/3√3a²); every w⁻ and w⁺ carries it."""
        return math.sqrt(16.0 / (3.0 * SQRT3 * self.a ** 2))

    def energy_formula(self, m: float, n: float) -> float:
        scale = self.units.hbar ** 2 / (2.0 * self.units.mu * self.a ** 2)
        return scale * (4.0 * math.pi / 3.0) ** 2 * (m * m + n * n - m * n)

    def triangle_energy(self, m: int, n: int) -> float:
        """(ħ²/2μa²)(4π/3)²(m² + n² − mn)."""
        n = check_quantum_number("n", n)
        m = check_quantum_number("m", m, 2)
        if m < 2 * n:
            raise QuantumNumberError("(m, n)", (m, n), "m >= 2n >= 2")
        return self.energy_formula(m, n)

    def contains(self, x, y):
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        return (y > SQRT3 * np.abs(x)) & (y < self.height)

    def edge_distance(self, x: float, y: float) -> float:
        """Signed distance to the nearest edge, positive inside."""
        return min((y - SQRT3 * x) / 2.0, (y + SQRT3 * x) / 2.0, self.height - y)

    def triangle_eigenfunction(self, state: TriangleState, x, y):
        """Normalized w⁻, w⁺ or w⁰ of ``state``; the sum is evaluated on the whole plane."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        parity = state.parity
        x_parity = Parity.PLUS if parity is Parity.ZERO else parity
        xs, ys = _wavevectors(self.a, state.m, state.n)
        trig = np.sin if x_parity is Parity.MINUS else np.cos
        total = np.zeros(np.broadcast(x, y).shape)
        for sign, kx, ky in zip(_X_SIGNS[x_parity], xs, ys):
            total = total + sign * trig(kx * x) * np.sin(ky * y)
        value = self.norm * total
        if parity is Parity.ZERO:
            value = value / math.sqrt(2.0)
        return value

    def _factors(self, packet: GaussianPacket2D, m: np.ndarray, n: np.ndarray):
        """Per-term 1D overlaps of the packet, each divided by √(b√π)."""
        xs, ys = _wavevectors(self.a, m, n)
        hbar, b = self.units.hbar, packet.b
        gauss = 1.0 / math.sqrt(b * math.sqrt(math.pi))
        sin_x = [gauss * np.asarray(gaussian_trig_overlap(OverlapKind.SIN, k, packet.x0, packet.p0x, b, hbar)) for k in xs]
        cos_x = [gauss * np.asarray(gaussian_trig_overlap(OverlapKind.COS, k, packet.x0, packet.p0x, b, hbar)) for k in xs]
        sin_y = [gauss * np.asarray(gaussian_trig_overlap(OverlapKind.SIN, k, packet.y0, packet.p0y, b, hbar)) for k in ys]
        return sin_x, cos_x, sin_y

    def parity_amplitudes(self, packet: GaussianPacket2D, m: np.ndarray, n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """⟨w⁻|ψ⟩ and ⟨w⁺|ψ⟩ for arrays of labels, from whole-plane Gaussian integrals."""
        sin_x, cos_x, sin_y = self._factors(packet, m, n)
        minus = sum(s * fx * fy for s, fx, fy in zip(_X_SIGNS[Parity.MINUS], sin_x, sin_y))
        plus = sum(s * fx * fy for s, fx, fy in zip(_X_SIGNS[Parity.PLUS], cos_x, sin_y))
        return self.norm * minus, self.norm * plus

    def window_labels(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> tuple[np.ndarray, np.ndarray]:
        """Labels (m, n) whose wavevector (A1, B1) lies near a hexagonal image of k0.

        The twelve plane waves of a state are the images of (A1, B1) under the
        symmetry group of the hexagonal lattice, so a state contributes only when
        one of the images of the packet's mean wavevector falls within
        ``n_sigma`` momentum spreads of (A1, B1).
        """
        window = window or WindowSpec()
        hbar = self.units.hbar
        k0 = np.array([packet.p0x, packet.p0y]) / hbar
        dk = 1.0 / (math.sqrt(2.0) * packet.b)
        reach = float(np.hypot(*k0)) + window.n_sigma * dk
        # m² + n² − mn ≥ 3m²/4 bounds m
        m_hi = int(math.ceil(reach * 3.0 * self.a / (4.0 * math.pi) * 2.0 / SQRT3)) + 1
        m_grid, n_grid = [], []
        for n in range(1, m_hi // 2 + 1):
            for m in range(2 * n, m_hi + 1):
                m_grid.append(m)
                n_grid.append(n)
        m_arr = np.array(m_grid, dtype=int)
        n_arr = np.array(n_grid, dtype=int)
        if m_arr.size == 0:
            return m_arr, n_arr
        xs, ys = _wavevectors(self.a, m_arr, n_arr)
        k1 = np.stack([xs[0], ys[0]], axis=1)
        images = []
        for j in range(6):
            c, s = math.cos(j * math.pi / 3.0), math.sin(j * math.pi / 3.0)
            rotated = np.array([c * k0[0] - s * k0[1], s * k0[0] + c * k0[1]])
            images.append(rotated)
            images.append(np.array([-rotated[0], rotated[1]]))
        distance = np.min(np.stack([np.hypot(*(k1 - img).T) for img in images]), axis=0)
        keep = distance <= window.n_sigma * dk
        if window.n_min is not None:
            keep &= n_arr >= window.n_min
        if window.n_max is not None:
            keep &= n_arr <= window.n_max
        return m_arr[keep], n_arr[keep]

    def triangle_coefficients(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        """Term-by-term closed-form coefficients for an interior packet."""
        self.check_margin(packet)
        m, n = self.window_labels(packet, window)
        minus, plus = self.parity_amplitudes(packet, m, n)
        lines, coeffs = [], []
        for i, (mi, ni) in enumerate(zip(m.tolist(), n.tolist())):
            energy = self.energy_formula(mi, ni)
            if mi == 2 * ni:
                lines.append(self.line((mi, ni), energy, Parity.ZERO))
                coeffs.append(plus[i] / math.sqrt(2.0))
            else:
                lines.append(self.line((mi, ni), energy, Parity.MINUS))
                coeffs.append(minus[i])
                lines.append(self.line((mi, ni), energy, Parity.PLUS))
                coeffs.append(plus[i])
        logger.debug(f"triangle: {len(lines)} states in window")
        return Expansion(tuple(lines), np.array(coeffs, dtype=complex), self.units.hbar)

    def expand(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        return self.triangle_coefficients(packet, window)

    def basis(self) -> EigenBasis:
        def evaluate(line: SpectralLine, points: np.ndarray) -> np.ndarray:
            state = TriangleState(*line.quantum_numbers, line.parity)
            x, y = points[:, 0], points[:, 1]
            return np.where(self.contains(x, y), self.triangle_eigenfunction(state, x, y), 0.0)

        return EigenBasis(self.tag, evaluate)

    def revival_time(self) -> float:
        """9μa²/4ħπ."""
        return 9.0 * self.units.mu * self.a ** 2 / (4.0 * self.units.hbar * math.pi)

    def classical_period(self, m: int, n: int) -> float:
        """T_rev/(2m − n), the period conjugate to m."""
        return self.revival_time() / (2 * m - n)

    def tau(self, packet: GaussianPacket2D) -> float:
        """a/v0."""
        v0 = packet.p0 / self.units.mu
        return math.inf if v0 == 0 else self.a / v0

    def window_centre(self, packet: GaussianPacket2D) -> tuple[int, int]:
        m, n = self.window_labels(packet)
        if m.size == 0:
            return 2, 1
        minus, plus = self.parity_amplitudes(packet, m, n)
        weight = np.abs(minus) ** 2 + np.abs(plus) ** 2
        i = int(np.argmax(weight))
        return int(m[i]), int(n[i])

    def time_scales(self, packet: GaussianPacket2D) -> TimeScales:
        return time_scales(self.energy_formula, self.window_centre(packet), self.units, ("m", "n"), packet)

    def _labels(self, count: int, allow_zero: bool) -> list[tuple[int, int, Parity]]:
        out = []
        limit = 2 * count + 2
        for n in range(1, limit):
            for m in range(2 * n, 2 * limit):
                if m == 2 * n:
                    if allow_zero:
                        out.append((m, n, Parity.ZERO))
                else:
                    out.append((m, n, Parity.MINUS))
                    if allow_zero:
                        out.append((m, n, Parity.PLUS))
        out.sort(key=lambda t: (self.energy_formula(t[0], t[1]), t))
        return out[:count]

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        return [self.line((m, n), self.energy_formula(m, n), p) for m, n, p in self._labels(count, True)]

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((-self.a / 2.0, self.a / 2.0), (0.0, self.height))

    def wall_margin(self, packet: GaussianPacket2D) -> float:
        return self.edge_distance(packet.x0, packet.y0)


class HalfTriangle(Billiard):
    """30-60-90 triangle x > 0 obtained by folding along the bisector x = 0.

    Eigenstates are √2·w⁻(m, n) for m > 2n; energies and T_rev are the parent's.
    """
    kind: ClassVar[Geometry] = Geometry.TRI306090

    a: float = Field(1.0, gt=0)

    @property
    def parent(self) -> TriangleBilliard:
        return TriangleBilliard(a=self.a, units=self.units)

    def energy(self, m: int, n: int) -> float:
        TriangleState(m, n, Parity.MINUS)
        return self.parent.energy_formula(m, n)

    def contains(self, x, y):
        return self.parent.contains(x, y) & (np.asarray(x, dtype=float) > 0.0)

    def eigenfunction(self, m: int, n: int, x, y):
        values = math.sqrt(2.0) * self.parent.triangle_eigenfunction(TriangleState(m, n, Parity.MINUS), x, y)
        return np.where(self.contains(x, y), values, 0.0)

    def coefficients(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        self.check_margin(packet)
        parent = self.parent
        m, n = parent.window_labels(packet, window)
        keep = m > 2 * n
        m, n = m[keep], n[keep]
        minus, _ = parent.parity_amplitudes(packet, m, n)
        lines = tuple(
            self.line((mi, ni), parent.energy_formula(mi, ni), Parity.MINUS) for mi, ni in zip(m.tolist(), n.tolist())
        )
        return Expansion(lines, math.sqrt(2.0) * np.asarray(minus, dtype=complex), self.units.hbar)

    def expand(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        return self.coefficients(packet, window)

    def basis(self) -> EigenBasis:
        def evaluate(line: SpectralLine, points: np.ndarray) -> np.ndarray:
            m, n = line.quantum_numbers
            return self.eigenfunction(m, n, points[:, 0], points[:, 1])

        return EigenBasis(self.tag, evaluate)

    def revival_time(self) -> float:
        return self.parent.revival_time()

    def tau(self, packet: GaussianPacket2D) -> float:
        return self.parent.tau(packet)

    def time_scales(self, packet: GaussianPacket2D) -> TimeScales:
        return self.parent.time_scales(packet)

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        return [
            self.line((m, n), self.parent.energy_formula(m, n), p) for m, n, p in self.parent._labels(count, False)
        ]

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((0.0, self.a / 2.0), (0.0, self.parent.height))

    def wall_margin(self, packet: GaussianPacket2D) -> float:
        return min(packet.x0, self.parent.edge_distance(packet.x0, packet.y0))


def triangle_fold_306090(billiard: TriangleBilliard) -> HalfTriangle:
    return HalfTriangle(a=billiard.a, units=billiard.units)


def triangle_closed_orbits(max_length_over_a: float) -> list[ClosedOrbit]:
    """Orbits with L = √3a·√(p² + pq + q²) ≤ bound·a for coprime p ≥ q ≥ 0.

    (1, 0) stands for both bisector orbits (1, 0) and (0, 1). ``launch`` is the
    angle of the unfolded displacement measured from the (1, 0) direction, and
    periods are in units of τ = a/v0.
    """
    if not max_length_over_a > 0:
        raise ValueError(f"bound must be positive, got {max_length_over_a}")
    orbits = []
    p_max = int(math.floor(max_length_over_a / SQRT3)) + 1
    for p in range(1, p_max + 1):
        for q in range(0, p + 1):
            if not coprime(p, q):
                continue
            length = SQRT3 * math.sqrt(p * p + p * q + q * q)
            if length > max_length_over_a * (1.0 + 1e-12):
                continue
            orbits.append(
                ClosedOrbit(
                    p=p,
                    q=q,
                    length=length,
                    period_over_tau=length,
                    launch=math.degrees(math.atan2(q * SQRT3 / 2.0, p + q / 2.0)),
                    recurrences=repetitions(length, max_length_over_a),
                )
            )
    orbits.sort(key=lambda o: (o.length, o.launch))
    return orbits
