from __future__ import annotations

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GaussianPacket1D(BaseModel):
    """Minimum-uncertainty packet centred at ``x0`` with momentum ``p0``.

    ``b`` is the width parameter of exp(-(x-x0)²/2b²); the position spread is
    Δx0 = b/√2. Either ``b`` or ``dx0`` may be given.
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    x0: float = Field(..., description="Initial centre")
    p0: float = Field(0.0, description="Initial momentum")
    b: float = Field(..., gt=0, description="Width parameter")

    @model_validator(mode="before")
    @classmethod
    def _width_from_spread(cls, data: Any) -> Any:
        if isinstance(data, dict) and "dx0" in data:
            data = dict(data)
            dx0 = data.pop("dx0")
            if "b" in data:
                raise ValueError("give either 'b' or 'dx0', not both")
            if dx0 is None or dx0 <= 0:
                raise ValueError(f"dx0 must be positive, got {dx0}")
            data["b"] = math.sqrt(2.0) * dx0
        return data

    @property
    def dx0(self) -> float:
        return self.b / math.sqrt(2.0)

    @classmethod
    def from_spread(cls, x0: float, p0: float, dx0: float) -> GaussianPacket1D:
        return cls(x0=x0, p0=p0, dx0=dx0)


class GaussianPacket2D(BaseModel):
    """Product of two 1D packets with a common width ``b``.

    Momentum may be given as components or in polar form ``p0``/``theta_deg``.
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    x0: float = 0.0
    y0: float = 0.0
    p0x: float = 0.0
    p0y: float = 0.0
    b: float = Field(..., gt=0, description="Common width parameter")

    @model_validator(mode="before")
    @classmethod
    def _migrate_fields(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        if "dx0" in data:
            dx0 = data.pop("dx0")
            if "b" in data:
                raise ValueError("give either 'b' or 'dx0', not both")
            if dx0 is None or dx0 <= 0:
                raise ValueError(f"dx0 must be positive, got {dx0}")
            data["b"] = math.sqrt(2.0) * dx0
        if "p0" in data or "theta_deg" in data:
            if "p0x" in data or "p0y" in data:
                raise ValueError("give momentum either as (p0x, p0y) or as (p0, theta_deg)")
            p0 = float(data.pop("p0", 0.0))
            theta = math.radians(float(data.pop("theta_deg", 0.0)))
            data["p0x"] = p0 * math.cos(theta)
            data["p0y"] = p0 * math.sin(theta)
        return data

    @property
    def dx0(self) -> float:
        return self.b / math.sqrt(2.0)

    @property
    def p0(self) -> float:
        return math.hypot(self.p0x, self.p0y)

    def axis(self, which: str) -> GaussianPacket1D:
        """The 1D factor along ``"x"`` or ``"y"``."""
        if which == "x":
            return GaussianPacket1D(x0=self.x0, p0=self.p0x, b=self.b)
        if which == "y":
            return GaussianPacket1D(x0=self.y0, p0=self.p0y, b=self.b)
        raise ValueError(f"axis must be 'x' or 'y', got {which!r}")
