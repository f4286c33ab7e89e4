from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class PhysicalUnits(BaseModel):
    """Unit system shared by every geometry; defaults are ħ = 2μ = a = R = 1."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    hbar: float = Field(1.0, gt=0, description="Reduced Planck constant")
    mu: float = Field(0.5, gt=0, description="Particle mass")
    length: float = Field(1.0, gt=0, description="Well size a (polygons) or radius R (circle)")

    def block(self) -> str:
        return f"hbar={self.hbar!r} mu={self.mu!r} length={self.length!r}"
