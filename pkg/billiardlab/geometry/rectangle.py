"""Rectangular and square billiards on [0, Lx] × [0, Ly], and the 45-45-90 fold."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Optional

import numpy as np
from pydantic import Field

from .._log import get_logger
from ..common.enums import Geometry, Parity
from ..config.packets import GaussianPacket2D
from ..config.scenario import WindowSpec
from ..core.evolution import EigenBasis
from ..core.moments import packet_energy_2d
from ..core.spectrum import Expansion, SpectralLine
from ..core.timescales import TimeScales, time_scales
from ..errors import FoldUnsupportedError, QuantumNumberError
from .base import Billiard, check_quantum_number
from .orbits import ClosedOrbit, coprime, repetitions
from .well1d import Well1D

logger = get_logger(__name__)

# largest denominator tried when looking for a rational (Lx/Ly)²
_RATIO_DENOMINATOR = 1000


def _speed(packet: GaussianPacket2D, mu: float) -> float:
    return packet.p0 / mu


@dataclass(frozen=True)
class SquareSymmetryState:
    """Square eigenstate of definite diagonal symmetry.

    ``minus`` and ``plus`` combine (n, m) and (m, n) for n ≠ m; ``zero`` is the
    non-degenerate diagonal state n = m.
    """
    n: int
    m: int
    parity: Parity

    def __post_init__(self) -> None:
        check_quantum_number("n", self.n)
        check_quantum_number("m", self.m)
        parity = Parity(self.parity)
        object.__setattr__(self, "parity", parity)
        if parity is Parity.ZERO and self.n != self.m:
            raise QuantumNumberError("parity", parity.value, "'zero' only when n == m")
        if parity in (Parity.MINUS, Parity.PLUS) and self.n == self.m:
            raise QuantumNumberError("parity", parity.value, "'minus'/'plus' need n != m")
        if parity is Parity.NONE:
            raise QuantumNumberError("parity", parity.value, "one of minus, plus, zero")


class RectBilliard(Billiard):
    kind: ClassVar[Geometry] = Geometry.RECT

    lx: float = Field(1.0, gt=0, description="Width Lx")
    ly: float = Field(1.0, gt=0, description="Height Ly")

    @classmethod
    def square(cls, a: float = 1.0, **kwargs) -> RectBilliard:
        return cls(lx=a, ly=a, **kwargs)

    @property
    def is_square(self) -> bool:
        return self.lx == self.ly

    @property
    def tag(self) -> Geometry:
        return Geometry.SQUARE if self.is_square else Geometry.RECT

    @property
    def x_well(self) -> Well1D:
        return Well1D(a=self.lx, units=self.units)

    @property
    def y_well(self) -> Well1D:
        return Well1D(a=self.ly, units=self.units)

    def energy_formula(self, nx: float, ny: float) -> float:
        return (self.units.hbar * math.pi) ** 2 * ((nx / self.lx) ** 2 + (ny / self.ly) ** 2) / (2.0 * self.units.mu)

    def rect_energy(self, nx: int, ny: int) -> float:
        """ħ²π²(nx²/Lx² + ny²/Ly²)/2μ."""
        nx = check_quantum_number("nx", nx)
        ny = check_quantum_number("ny", ny)
        return self.energy_formula(nx, ny)

    def eigenfunction(self, nx: int, ny: int, x, y):
        return np.asarray(self.x_well.eigenfunction(nx, x)) * np.asarray(self.y_well.eigenfunction(ny, y))

    def symmetric_eigenfunction(self, state: SquareSymmetryState, x, y):
        """w⁻, w⁺ or w⁰ of a square; w⁻ vanishes on the diagonal y = x."""
        self._require_square("diagonal symmetry states")
        w = self.x_well
        direct = np.asarray(w.eigenfunction(state.n, x)) * np.asarray(w.eigenfunction(state.m, y))
        if state.parity is Parity.ZERO:
            return direct
        swapped = np.asarray(w.eigenfunction(state.m, x)) * np.asarray(w.eigenfunction(state.n, y))
        sign = -1.0 if state.parity is Parity.MINUS else 1.0
        return (direct + sign * swapped) / math.sqrt(2.0)

    def _require_square(self, what: str) -> None:
        if not self.is_square:
            raise FoldUnsupportedError(Geometry.RECT.value, f"{what} need Lx == Ly, got {self.lx} x {self.ly}")

    def axis_expansions(
        self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None
    ) -> tuple[Expansion, Expansion]:
        """Closed-form 1D expansions of the x and y factors of the packet."""
        x_packet, y_packet = packet.axis("x"), packet.axis("y")
        x_range = self.x_well.window_range(x_packet, window)
        y_range = self.y_well.window_range(y_packet, window)
        x_exp = Expansion(
            self.x_well._lines(x_range),
            self.x_well.closed_form_amplitudes(x_packet, np.arange(x_range.start, x_range.stop)),
            self.units.hbar,
        )
        y_exp = Expansion(
            self.y_well._lines(y_range),
            self.y_well.closed_form_amplitudes(y_packet, np.arange(y_range.start, y_range.stop)),
            self.units.hbar,
        )
        return x_exp, y_exp

    def square_coefficients(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        """a(nx, ny) = a_nx·a_ny from the two 1D closed forms."""
        self.check_margin(packet)
        x_exp, y_exp = self.axis_expansions(packet, window)
        lines = []
        for x_line in x_exp.lines:
            for y_line in y_exp.lines:
                nx, ny = x_line.quantum_numbers[0], y_line.quantum_numbers[0]
                lines.append(self.line((nx, ny), self.energy_formula(nx, ny)))
        coeffs = np.outer(x_exp.coefficients, y_exp.coefficients).reshape(-1)
        logger.debug(f"{self.tag.value}: {len(x_exp)} x {len(y_exp)} product states")
        return Expansion(tuple(lines), coeffs, self.units.hbar)

    def _pair_window(self, packet: GaussianPacket2D, window: Optional[WindowSpec]) -> range:
        x_range = self.x_well.window_range(packet.axis("x"), window)
        y_range = self.y_well.window_range(packet.axis("y"), window)
        return range(min(x_range.start, y_range.start), max(x_range.stop, y_range.stop))

    def _pair_amplitudes(self, packet: GaussianPacket2D, ns: range) -> np.ndarray:
        """Matrix c[i, j] = a_{n_i}^x · a_{n_j}^y over a common index range."""
        grid = np.arange(ns.start, ns.stop)
        ax = self.x_well.closed_form_amplitudes(packet.axis("x"), grid)
        ay = self.y_well.closed_form_amplitudes(packet.axis("y"), grid)
        return np.outer(ax, ay)

    def symmetry_coefficients(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        """Expansion in the w⁻/w⁺/w⁰ basis of the square.

        Lines carry (n, m) with n ≥ m; both parity partners of a degenerate pair
        are kept.
        """
        self._require_square("diagonal symmetry states")
        self.check_margin(packet)
        ns = self._pair_window(packet, window)
        c = self._pair_amplitudes(packet, ns)
        lines, coeffs = [], []
        for i, n in enumerate(ns):
            for j, m in enumerate(ns[: i + 1]):
                energy = self.energy_formula(n, m)
                if n == m:
                    lines.append(self.line((n, m), energy, Parity.ZERO))
                    coeffs.append(c[i, i])
                    continue
                lines.append(self.line((n, m), energy, Parity.MINUS))
                coeffs.append((c[i, j] - c[j, i]) / math.sqrt(2.0))
                lines.append(self.line((n, m), energy, Parity.PLUS))
                coeffs.append((c[i, j] + c[j, i]) / math.sqrt(2.0))
        return Expansion(tuple(lines), np.array(coeffs, dtype=complex), self.units.hbar)

    def expand(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        return self.square_coefficients(packet, window)

    def basis(self) -> EigenBasis:
        def evaluate(line: SpectralLine, points: np.ndarray) -> np.ndarray:
            nx, ny = line.quantum_numbers
            return self.eigenfunction(nx, ny, points[:, 0], points[:, 1])

        return EigenBasis(self.tag, evaluate)

    def axis_revival_times(self) -> tuple[float, float]:
        return self.x_well.revival_time(), self.y_well.revival_time()

    def revival_time(self) -> Optional[float]:
        """Smallest T with T = q·T_x = p·T_y, or None for incommensurate sides.

        (Lx/Ly)² is matched to a fraction p/q with denominator at most 1000.
        """
        t_x, t_y = self.axis_revival_times()
        ratio = (self.lx / self.ly) ** 2
        frac = Fraction(ratio).limit_denominator(_RATIO_DENOMINATOR)
        if abs(float(frac) - ratio) > 1e-12 * ratio:
            logger.info(f"(Lx/Ly)^2 = {ratio!r} is not a small rational; no common revival")
            return None
        return frac.denominator * t_x

    def tau(self, packet: GaussianPacket2D) -> float:
        """2a/v0 with a = Lx."""
        v0 = _speed(packet, self.units.mu)
        return math.inf if v0 == 0 else 2.0 * self.lx / v0

    def window_centre(self, packet: GaussianPacket2D) -> tuple[int, int]:
        nx, _ = self.x_well.n_window(packet.axis("x"))
        ny, _ = self.y_well.n_window(packet.axis("y"))
        return nx, ny

    def time_scales(self, packet: GaussianPacket2D) -> TimeScales:
        return time_scales(self.energy_formula, self.window_centre(packet), self.units, ("nx", "ny"), packet)

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        pairs = [(nx, ny) for nx in range(1, count + 1) for ny in range(1, count + 1)]
        pairs.sort(key=lambda p: (self.energy_formula(*p), p))
        return [self.line(p, self.energy_formula(*p)) for p in pairs[:count]]

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((0.0, self.lx), (0.0, self.ly))

    def wall_margin(self, packet: GaussianPacket2D) -> float:
        return min(packet.x0, self.lx - packet.x0, packet.y0, self.ly - packet.y0)

    def mean_energy(self, packet: GaussianPacket2D) -> float:
        return packet_energy_2d(packet, self.units)


class IsocelesHalfSquare(Billiard):
    """The 45-45-90 triangle 0 < y < x < a obtained by folding a square along y = x.

    Its eigenstates are √2·w⁻(n, m) for n > m, with the square's energies.
    """
    kind: ClassVar[Geometry] = Geometry.ISOCELES45

    a: float = Field(1.0, gt=0)

    @property
    def parent(self) -> RectBilliard:
        return RectBilliard.square(self.a, units=self.units)

    def energy(self, n: int, m: int) -> float:
        n = check_quantum_number("n", n)
        m = check_quantum_number("m", m)
        if n <= m:
            raise QuantumNumberError("(n, m)", (n, m), "n > m >= 1")
        return self.parent.energy_formula(n, m)

    def contains(self, x, y):
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        return (y > 0.0) & (y < x) & (x < self.a)

    def eigenfunction(self, n: int, m: int, x, y):
        """u_n(x)u_m(y) − u_m(x)u_n(y) inside the half-square, zero elsewhere."""
        self.energy(n, m)
        state = SquareSymmetryState(n, m, Parity.MINUS)
        values = math.sqrt(2.0) * np.asarray(self.parent.symmetric_eigenfunction(state, x, y))
        return np.where(self.contains(x, y), values, 0.0)

    def coefficients(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        """a_n^x a_m^y − a_m^x a_n^y for n > m; the packet is taken to lie inside the half."""
        self.check_margin(packet)
        square = self.parent
        ns = square._pair_window(packet, window)
        c = square._pair_amplitudes(packet, ns)
        lines, coeffs = [], []
        for i, n in enumerate(ns):
            for j in range(i):
                m = ns[j]
                lines.append(self.line((n, m), square.energy_formula(n, m), Parity.MINUS))
                coeffs.append(c[i, j] - c[j, i])
        return Expansion(tuple(lines), np.array(coeffs, dtype=complex), self.units.hbar)

    def expand(self, packet: GaussianPacket2D, window: Optional[WindowSpec] = None) -> Expansion:
        return self.coefficients(packet, window)

    def basis(self) -> EigenBasis:
        def evaluate(line: SpectralLine, points: np.ndarray) -> np.ndarray:
            n, m = line.quantum_numbers
            return self.eigenfunction(n, m, points[:, 0], points[:, 1])

        return EigenBasis(self.tag, evaluate)

    def revival_time(self) -> float:
        return self.parent.x_well.revival_time()

    def tau(self, packet: GaussianPacket2D) -> float:
        return self.parent.tau(packet)

    def time_scales(self, packet: GaussianPacket2D) -> TimeScales:
        return self.parent.time_scales(packet)

    def lowest_lines(self, count: int) -> list[SpectralLine]:
        size = count + 2
        pairs = [(n, m) for n in range(2, size + 1) for m in range(1, n)]
        pairs.sort(key=lambda p: (self.parent.energy_formula(*p), p))
        return [self.line(p, self.parent.energy_formula(*p), Parity.MINUS) for p in pairs[:count]]

    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        return ((0.0, self.a), (0.0, self.a))

    def wall_margin(self, packet: GaussianPacket2D) -> float:
        return min(packet.y0, self.a - packet.x0, (packet.x0 - packet.y0) / math.sqrt(2.0))


def square_fold_isoceles(billiard: RectBilliard) -> IsocelesHalfSquare:
    """Fold a square along its diagonal.

    Raises:
        FoldUnsupportedError: If the billiard is not square.
    """
    billiard._require_square("the diagonal fold")
    return IsocelesHalfSquare(a=billiard.lx, units=billiard.units)


def square_closed_orbits(max_period_over_tau: float) -> list[ClosedOrbit]:
    """Primitive (p, q) orbits of the square with T/τ = √(p²+q²) ≤ bound, sorted by angle.

    τ = 2a/v0, so the lengths are in units of a: L = 2a·√(p²+q²).
    """
    if not max_period_over_tau > 0:
        raise ValueError(f"bound must be positive, got {max_period_over_tau}")
    orbits = []
    p_max = int(math.floor(max_period_over_tau))
    for p in range(1, p_max + 1):
        for q in range(0, p + 1):
            if not coprime(p, q):
                continue
            period = math.hypot(p, q)
            if period > max_period_over_tau + 1e-9:
                continue
            orbits.append(
                ClosedOrbit(
                    p=p,
                    q=q,
                    length=2.0 * period,
                    period_over_tau=period,
                    launch=math.degrees(math.atan2(q, p)),
                    recurrences=repetitions(period, max_period_over_tau),
                )
            )
    orbits.sort(key=lambda o: (o.launch, o.period_over_tau))
    return orbits


def isoceles_closed_orbits(max_period_over_tau: float) -> list[ClosedOrbit]:
    """Square orbits plus the isolated orbit at 135° of the folded triangle.

    The isolated orbit bounces between the hypotenuse and the right-angle corner
    region along the perpendicular bisector; its length is √2·a/2.
    """
    orbits = square_closed_orbits(max_period_over_tau)
    single = math.sqrt(2.0) / 4.0
    if single <= max_period_over_tau + 1e-9:
        orbits.append(
            ClosedOrbit(
                p=1,
                q=1,
                length=2.0 * single,
                period_over_tau=single,
                launch=135.0,
                recurrences=repetitions(single, max_period_over_tau),
                special=True,
            )
        )
    return orbits
