from __future__ import annotations

import hashlib
import json
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.enums import Geometry
from ._mixins import SpanMixin
from .base import PhysicalUnits
from .packets import GaussianPacket1D, GaussianPacket2D

OutputName = Literal["coefficients", "autocorrelation", "peaks", "timescales", "density", "regions"]


class GeometryParams(BaseModel):
    model_config = ConfigDict(validate_assignment=True, extra='forbid')

    size: Optional[float] = Field(None, gt=0, description="Side a or radius R; defaults to units.length")
    lx: Optional[float] = Field(None, gt=0, description="Rectangle width")
    ly: Optional[float] = Field(None, gt=0, description="Rectangle height")
    offset: float = Field(0.0, description="Left edge d of a 1D well")


class WindowSpec(BaseModel):
    """Overrides for the automatic truncation windows."""
    model_config = ConfigDict(validate_assignment=True, extra='forbid')

    n_sigma: float = Field(6.0, gt=0, description="Half-width of automatic windows in units of the spread")
    n_min: Optional[int] = Field(None, ge=1)
    n_max: Optional[int] = Field(None, ge=1)
    m_max: Optional[int] = Field(None, ge=0, le=200)
    nr_max: Optional[int] = Field(None, ge=0)

    @model_validator(mode="after")
    def _ordered(self) -> WindowSpec:
        if self.n_min is not None and self.n_max is not None and self.n_max < self.n_min:
            raise ValueError(f"n_max ({self.n_max}) must be >= n_min ({self.n_min})")
        return self


class TimeGridSpec(SpanMixin):
    """Uniform grid ``linspace(start, stop, samples)`` in the chosen time unit."""
    samples: int = Field(2001, ge=2, description="Number of samples including both ends")
    unit: Literal["absolute", "revival", "tau"] = "revival"


class DensitySpec(BaseModel):
    model_config = ConfigDict(validate_assignment=True, extra='forbid')

    times: list[float] = Field(..., min_length=1, description="Snapshot times in the time-grid unit")
    points: int = Field(101, ge=2, le=2001, description="Grid points per axis")


class Scenario(BaseModel):
    model_config = ConfigDict(validate_assignment=True, extra='forbid')

    name: str = "scenario"
    geometry: Geometry
    geometry_params: GeometryParams = Field(default_factory=GeometryParams)
    units: PhysicalUnits = Field(default_factory=PhysicalUnits)
    packet: Union[GaussianPacket1D, GaussianPacket2D]
    window: WindowSpec = Field(default_factory=WindowSpec)
    time_grid: TimeGridSpec = Field(default_factory=lambda: TimeGridSpec(stop=1.0))
    outputs: list[OutputName] = Field(..., min_length=1)
    coefficient_method: Literal["closed_form", "exact", "momentum"] = "closed_form"
    peak_threshold: float = Field(0.1, gt=0, lt=1)
    density: Optional[DensitySpec] = None

    @model_validator(mode="before")
    @classmethod
    def _packet_for_geometry(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        packet = data.get("packet")
        if isinstance(packet, dict):
            data = dict(data)
            if data.get("geometry") == Geometry.WELL1D.value:
                data["packet"] = GaussianPacket1D.model_validate(packet)
            else:
                data["packet"] = GaussianPacket2D.model_validate(packet)
        return data

    @model_validator(mode="after")
    def _consistency(self) -> Scenario:
        one_d = self.geometry is Geometry.WELL1D
        if one_d and not isinstance(self.packet, GaussianPacket1D):
            raise ValueError("geometry 'well1d' needs a 1D packet (x0, p0, b)")
        if not one_d and not isinstance(self.packet, GaussianPacket2D):
            raise ValueError(f"geometry '{self.geometry.value}' needs a 2D packet (x0, y0, p0x, p0y, b)")
        if self.geometry is Geometry.RECT:
            if self.geometry_params.lx is None or self.geometry_params.ly is None:
                raise ValueError("geometry 'rect' needs geometry_params.lx and geometry_params.ly")
        if self.coefficient_method != "closed_form" and not one_d:
            raise ValueError("coefficient_method applies to 'well1d' only")
        if "density" in self.outputs and self.density is None:
            raise ValueError("output 'density' needs a 'density' section")
        if "regions" in self.outputs and self.geometry not in (Geometry.CIRCLE, Geometry.HALFCIRCLE):
            raise ValueError("output 'regions' is available for circular geometries only")
        return self

    @property
    def size(self) -> float:
        return self.geometry_params.size or self.units.length

    def fingerprint(self) -> str:
        """SHA-256 of the canonical JSON form; identical scenarios hash identically."""
        canonical = json.dumps(self.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class WallScanSpec(SpanMixin):
    """x0 grid (in units of a) and packet settings for the wall-proximity scan."""
    start: float = Field(0.0, ge=0.0)
    stop: float = Field(1.5, le=1.5, description="Last x0/a; the scan stays within [0, 1.5a]")
    points: int = Field(61, ge=2, le=10001)
    widths: list[float] = Field(default_factory=lambda: [0.05, 0.1], min_length=1, description="Δx0/a values")
    p0: float = 0.0
    n_states: int = Field(40, ge=1)
    a: float = Field(1.0, gt=0)
    units: PhysicalUnits = Field(default_factory=PhysicalUnits)

    @model_validator(mode="after")
    def _positive_widths(self) -> WallScanSpec:
        if any(w <= 0 for w in self.widths):
            raise ValueError(f"widths must be positive, got {self.widths}")
        return self
