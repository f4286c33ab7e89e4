from ._mixins import SpanMixin
from .base import PhysicalUnits
from .loader import load_model, load_scenario, load_wall_scan
from .packets import GaussianPacket1D, GaussianPacket2D
from .scenario import DensitySpec, GeometryParams, Scenario, TimeGridSpec, WallScanSpec, WindowSpec

__all__ = [
    "SpanMixin",
    "PhysicalUnits",
    "GaussianPacket1D",
    "GaussianPacket2D",
    "GeometryParams",
    "WindowSpec",
    "TimeGridSpec",
    "DensitySpec",
    "Scenario",
    "WallScanSpec",
    "load_model",
    "load_scenario",
    "load_wall_scan",
]
