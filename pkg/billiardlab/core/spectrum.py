from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..common.enums import Geometry, Parity
from ..errors import NormalizationError

OVERSHOOT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpectralLine:
    """One eigenstate: quantum numbers, energy, symmetry label and geometry tag.

    Circular lines carry ``(m, n_r)``; the 1D well carries ``(n,)``; polygonal
    lines carry their two quantum numbers in the geometry's own order.
    """
    quantum_numbers: tuple[int, ...]
    energy: float
    geometry: Geometry
    parity: Parity = Parity.NONE

    @property
    def label(self) -> str:
        numbers = ",".join(str(n) for n in self.quantum_numbers)
        suffix = {Parity.MINUS: "-", Parity.PLUS: "+", Parity.ZERO: "0"}.get(self.parity, "")
        return f"({numbers}){suffix}"

    @property
    def angular_number(self) -> Optional[int]:
        """L_z/ħ for full-disk lines, None elsewhere."""
        if self.geometry is Geometry.CIRCLE:
            return self.quantum_numbers[0]
        return None


@dataclass(frozen=True, eq=False)
class Expansion:
    """Truncated eigen-expansion of a packet.

    ``coefficients[i]`` is ⟨line_i|ψ⟩. The captured probability Σ|a|² may fall
    short of one when the window or the well misses part of the packet, but may
    not exceed one by more than ``OVERSHOOT_TOLERANCE``.
    """
    lines: tuple[SpectralLine, ...]
    coefficients: np.ndarray
    hbar: float = 1.0
    captured_probability: float = field(init=False)

    def __post_init__(self) -> None:
        coeffs = np.array(self.coefficients, dtype=complex).reshape(-1)
        if coeffs.size != len(self.lines):
            raise ValueError(f"{len(self.lines)} lines but {coeffs.size} coefficients")
        geometries = {line.geometry for line in self.lines}
        if len(geometries) > 1:
            raise ValueError(f"expansion mixes geometries {sorted(g.value for g in geometries)}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "coefficients", coeffs)
        captured = float(np.sum(np.abs(coeffs) ** 2))
        if captured > 1.0 + OVERSHOOT_TOLERANCE:
            raise NormalizationError(
                captured, "the closed forms are accurate for interior packets only"
            )
        object.__setattr__(self, "captured_probability", captured)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[SpectralLine, complex]], hbar: float = 1.0) -> Expansion:
        pairs = list(terms)
        return cls(tuple(p[0] for p in pairs), np.array([p[1] for p in pairs], dtype=complex), hbar)

    @property
    def terms(self) -> list[tuple[SpectralLine, complex]]:
        return list(zip(self.lines, (complex(c) for c in self.coefficients)))

    @property
    def geometry(self) -> Optional[Geometry]:
        return self.lines[0].geometry if self.lines else None

    @property
    def energies(self) -> np.ndarray:
        return np.array([line.energy for line in self.lines], dtype=float)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.coefficients) ** 2

    def __len__(self) -> int:
        return len(self.lines)

    def moment(self, k: int = 1) -> float:
        """Σ|a|²·E^k."""
        return float(np.dot(self.probabilities, self.energies ** k))

    def angular_moment(self, k: int = 1) -> float:
        """Σ|a|²·(mħ)^k over full-disk lines."""
        numbers = [line.angular_number for line in self.lines]
        if any(m is None for m in numbers):
            raise ValueError("angular moments need lines carrying an angular number")
        lz = self.hbar * np.array(numbers, dtype=float)
        return float(np.dot(self.probabilities, lz ** k))

    def select(self, keep: Sequence[bool]) -> Expansion:
        mask = np.asarray(keep, dtype=bool)
        lines = tuple(line for line, flag in zip(self.lines, mask) if flag)
        return Expansion(lines, self.coefficients[mask], self.hbar)
