from ..common.enums import Geometry
from .base import Billiard
from .circle import (
    CircBilliard,
    CircState,
    HalfCircle,
    WKBResidual,
    circle_radial_potential,
    closed_orbits,
    wkb_phase,
    wkb_zero,
)
from .orbits import ClosedOrbit
from .rectangle import (
    IsocelesHalfSquare,
    RectBilliard,
    SquareSymmetryState,
    isoceles_closed_orbits,
    square_closed_orbits,
    square_fold_isoceles,
)
from .triangle import HalfTriangle, TriangleBilliard, TriangleState, triangle_closed_orbits, triangle_fold_306090
from .well1d import Well1D


def build_billiard(scenario) -> Billiard:
    """Instantiate the billiard a :class:`~billiardlab.config.Scenario` describes."""
    params, units, size = scenario.geometry_params, scenario.units, scenario.size
    geometry = scenario.geometry
    if geometry is Geometry.WELL1D:
        return Well1D(a=size, d=params.offset, units=units)
    if geometry is Geometry.RECT:
        return RectBilliard(lx=params.lx, ly=params.ly, units=units)
    if geometry is Geometry.SQUARE:
        return RectBilliard.square(size, units=units)
    if geometry is Geometry.ISOCELES45:
        return square_fold_isoceles(RectBilliard.square(size, units=units))
    if geometry is Geometry.TRIANGLE:
        return TriangleBilliard(a=size, units=units)
    if geometry is Geometry.TRI306090:
        return triangle_fold_306090(TriangleBilliard(a=size, units=units))
    if geometry is Geometry.CIRCLE:
        return CircBilliard(R=size, units=units)
    if geometry is Geometry.HALFCIRCLE:
        return CircBilliard(R=size, units=units).half_circle_view()
    raise ValueError(f"unknown geometry {geometry!r}")


__all__ = [
    "Billiard",
    "build_billiard",
    "CircBilliard",
    "CircState",
    "HalfCircle",
    "WKBResidual",
    "circle_radial_potential",
    "closed_orbits",
    "wkb_phase",
    "wkb_zero",
    "ClosedOrbit",
    "IsocelesHalfSquare",
    "RectBilliard",
    "SquareSymmetryState",
    "isoceles_closed_orbits",
    "square_closed_orbits",
    "square_fold_isoceles",
    "HalfTriangle",
    "TriangleBilliard",
    "TriangleState",
    "triangle_closed_orbits",
    "triangle_fold_306090",
    "Well1D",
]
