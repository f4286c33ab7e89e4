from __future__ import annotations

from abc import ABC, abstractmethod
from typing import ClassVar, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .._log import get_logger
from ..common.enums import Geometry, Parity
from ..config.base import PhysicalUnits
from ..config.packets import GaussianPacket1D, GaussianPacket2D
from ..config.scenario import WindowSpec
from ..core.evolution import EigenBasis
from ..core.spectrum import Expansion, SpectralLine
from ..core.timescales import TimeScales
from ..errors import QuantumNumberError, warn_wall_proximity

logger = get_logger(__name__)

Packet = Union[GaussianPacket1D, GaussianPacket2D]

# closed forms and window rules assume the packet stays this many spreads from any wall
WALL_MARGIN_SPREADS = 4.0


def check_quantum_number(name: str, value: int, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise QuantumNumberError(name, value, f"integer >= {minimum}")
    return int(value)


class Billiard(BaseModel, ABC):
    """Common surface of every billiard and folded half-billiard."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    kind: ClassVar[Geometry]
    units: PhysicalUnits = Field(default_factory=PhysicalUnits)

    @property
    def tag(self) -> Geometry:
        """Geometry label carried by this billiard's spectral lines."""
        return self.kind

    def line(self, quantum_numbers: tuple[int, ...], energy: float, parity: Parity = Parity.NONE) -> SpectralLine:
        return SpectralLine(tuple(int(n) for n in quantum_numbers), float(energy), self.tag, parity)

    @abstractmethod
    def expand(self, packet: Packet, window: Optional[WindowSpec] = None) -> Expansion:
        """Default expansion of ``packet`` in this billiard's eigenbasis."""

    @abstractmethod
    def basis(self) -> EigenBasis:
        """Eigenfunction evaluator tagged with this geometry."""

    @abstractmethod
    def revival_time(self) -> Optional[float]:
        """Exact revival time, or None when the spectrum has no common revival."""

    @abstractmethod
    def tau(self, packet: Packet) -> float:
        """Reference period used to express orbit periods."""

    @abstractmethod
    def time_scales(self, packet: Packet) -> TimeScales:
        """Time scales at the quantum numbers the packet is centred on."""

    @abstractmethod
    def lowest_lines(self, count: int) -> list[SpectralLine]:
        """The ``count`` lowest eigenstates, sorted by energy."""

    @abstractmethod
    def bounding_box(self) -> tuple[tuple[float, float], ...]:
        """Per-axis (lo, hi) extents of the billiard."""

    @abstractmethod
    def wall_margin(self, packet: Packet) -> float:
        """Distance from the packet centre to the nearest wall (negative outside)."""

    def check_margin(self, packet: Packet) -> bool:
        """Warn and return False when the packet is closer than four spreads to a wall."""
        margin = self.wall_margin(packet)
        needed = WALL_MARGIN_SPREADS * packet.dx0
        if margin < needed:
            warn_wall_proximity(
                f"{self.kind.value}: packet centre is {margin:.4g} from the nearest wall, "
                f"below {WALL_MARGIN_SPREADS:g}·Δx0 = {needed:.4g}",
                logger,
            )
            return False
        return True
