from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..config.base import PhysicalUnits
from ..config.packets import GaussianPacket1D, GaussianPacket2D

Packet = Union[GaussianPacket1D, GaussianPacket2D]


@dataclass(frozen=True)
class PacketMoments:
    x_mean: float
    x_spread: float
    p_mean: float
    p_spread: float
    energy: float


@dataclass(frozen=True)
class AngularMomentumMoments:
    mean: float
    mean_sq: float
    spread: float


def packet_moments_1d(packet: GaussianPacket1D, units: PhysicalUnits) -> PacketMoments:
    """⟨x⟩, Δx, ⟨p⟩, Δp and ⟨E⟩ of a free 1D Gaussian."""
    hbar, mu, b = units.hbar, units.mu, packet.b
    return PacketMoments(
        x_mean=packet.x0,
        x_spread=b / math.sqrt(2.0),
        p_mean=packet.p0,
        p_spread=hbar / (math.sqrt(2.0) * b),
        energy=(packet.p0 ** 2 + hbar ** 2 / (2.0 * b * b)) / (2.0 * mu),
    )


def packet_energy_2d(packet: GaussianPacket2D, units: PhysicalUnits) -> float:
    """(p0x² + p0y² + ħ²/b²)/2μ."""
    return (packet.p0x ** 2 + packet.p0y ** 2 + units.hbar ** 2 / packet.b ** 2) / (2.0 * units.mu)


def packet_energy(packet: Packet, units: PhysicalUnits) -> float:
    if isinstance(packet, GaussianPacket2D):
        return packet_energy_2d(packet, units)
    return packet_moments_1d(packet, units).energy


def angular_momentum_moments(packet: GaussianPacket2D, units: PhysicalUnits) -> AngularMomentumMoments:
    """⟨L_z⟩, ⟨L_z²⟩ and ΔL_z about the origin."""
    lz = packet.x0 * packet.p0y - packet.y0 * packet.p0x
    b, hbar = packet.b, units.hbar
    spread_sq = 0.5 * b * b * (packet.p0x ** 2 + packet.p0y ** 2) + hbar ** 2 / (2.0 * b * b) * (
        packet.x0 ** 2 + packet.y0 ** 2
    )
    return AngularMomentumMoments(mean=lz, mean_sq=lz * lz + spread_sq, spread=math.sqrt(spread_sq))


def spreading_time(packet: Packet, units: PhysicalUnits) -> float:
    """t0 = 2μΔx0²/ħ = μb²/ħ."""
    return units.mu * packet.b ** 2 / units.hbar


def gaussian_1d(packet: GaussianPacket1D, x: Union[float, np.ndarray], units: PhysicalUnits) -> np.ndarray:
    """Initial wave function (b^½ π^¼)⁻¹·exp(-(x-x0)²/2b²)·exp(ip0(x-x0)/ħ)."""
    u = np.asarray(x, dtype=float) - packet.x0
    norm = 1.0 / math.sqrt(packet.b * math.sqrt(math.pi))
    return norm * np.exp(-0.5 * (u / packet.b) ** 2 + 1j * packet.p0 * u / units.hbar)


def gaussian_2d(
    packet: GaussianPacket2D,
    x: Union[float, np.ndarray],
    y: Union[float, np.ndarray],
    units: PhysicalUnits,
) -> np.ndarray:
    return gaussian_1d(packet.axis("x"), x, units) * gaussian_1d(packet.axis("y"), y, units)


def free_density(
    packet: GaussianPacket1D, x: Union[float, np.ndarray], t: float, units: PhysicalUnits
) -> np.ndarray:
    """Free-particle probability density at time t; the width grows as b·√(1+(t/t0)²)."""
    t0 = spreading_time(packet, units)
    bt = packet.b * math.sqrt(1.0 + (t / t0) ** 2)
    centre = packet.x0 + packet.p0 * t / units.mu
    u = np.asarray(x, dtype=float) - centre
    return np.exp(-((u / bt) ** 2)) / (bt * math.sqrt(math.pi))
