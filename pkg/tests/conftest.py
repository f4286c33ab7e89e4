"""
Shared pytest fixtures for the billiardlab test suite.
"""
from __future__ import annotations

import math
from pathlib import Path

import pytest
import yaml

from billiardlab.config import GaussianPacket1D, GaussianPacket2D, PhysicalUnits
from billiardlab.geometry import CircBilliard, RectBilliard, TriangleBilliard, Well1D


@pytest.fixture()
def units() -> PhysicalUnits:
    """ħ = 2μ = a = 1."""
    return PhysicalUnits()


@pytest.fixture()
def well() -> Well1D:
    return Well1D()


@pytest.fixture()
def square() -> RectBilliard:
    return RectBilliard.square(1.0)


@pytest.fixture()
def triangle() -> TriangleBilliard:
    return TriangleBilliard(a=1.0)


@pytest.fixture()
def circle() -> CircBilliard:
    return CircBilliard(R=1.0)


@pytest.fixture()
def centred_packet() -> GaussianPacket1D:
    return GaussianPacket1D(x0=0.5, p0=0.0, dx0=0.05)


@pytest.fixture()
def moving_packet() -> GaussianPacket1D:
    return GaussianPacket1D(x0=0.4, p0=40.0 * math.pi, dx0=0.05)


@pytest.fixture()
def square_packet() -> GaussianPacket2D:
    return GaussianPacket2D(x0=0.5, y0=0.5, p0=40.0 * math.pi, theta_deg=26.57, dx0=0.05)


@pytest.fixture()
def triangle_packet() -> GaussianPacket2D:
    return GaussianPacket2D(x0=0.0, y0=0.5, p0x=30.0, p0y=20.0, dx0=0.04)


@pytest.fixture()
def well_scenario_dict() -> dict:
    return {
        "name": "well_centre",
        "geometry": "well1d",
        "packet": {"x0": 0.5, "p0": 0.0, "dx0": 0.05},
        "time_grid": {"start": 0.0, "stop": 1.0, "samples": 801, "unit": "revival"},
        "outputs": ["coefficients", "autocorrelation", "peaks", "timescales"],
    }


@pytest.fixture()
def write_yaml(tmp_path: Path):
    """Dump a mapping to a YAML file under ``tmp_path`` and return its path."""
    def _write(data: dict, name: str = "scenario.yaml") -> Path:
        path = tmp_path / name
        path.write_text(yaml.safe_dump(data))
        return path

    return _write


@pytest.fixture()
def interior_packets():
    """Draw packets uniformly over a billiard's bounding box, keeping those ``spreads``·Δx0 from every wall."""
    def _draw(billiard, rng, count, dx0_range=(0.02, 0.035), spreads=4.0, p_max=60.0) -> list[GaussianPacket2D]:
        packets = []
        (x_lo, x_hi), (y_lo, y_hi) = billiard.bounding_box()
        while len(packets) < count:
            dx0 = rng.uniform(*dx0_range)
            speed, angle = rng.uniform(0.0, p_max), rng.uniform(0.0, 2.0 * math.pi)
            packet = GaussianPacket2D(
                x0=rng.uniform(x_lo, x_hi),
                y0=rng.uniform(y_lo, y_hi),
                p0x=speed * math.cos(angle),
                p0y=speed * math.sin(angle),
                dx0=dx0,
            )
            if billiard.wall_margin(packet) >= spreads * dx0:
                packets.append(packet)
        return packets

    return _draw
