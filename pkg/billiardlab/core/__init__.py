from .evolution import AutocorrelationSeries, EigenBasis, Peak, autocorrelation, density_on_grid, evolve_density
from .moments import (
    AngularMomentumMoments,
    PacketMoments,
    angular_momentum_moments,
    free_density,
    gaussian_1d,
    gaussian_2d,
    packet_energy,
    packet_energy_2d,
    packet_moments_1d,
    spreading_time,
)
from .spectrum import Expansion, SpectralLine
from .timescales import TimeScales, time_scales

__all__ = [
    "AutocorrelationSeries",
    "EigenBasis",
    "Peak",
    "autocorrelation",
    "density_on_grid",
    "evolve_density",
    "AngularMomentumMoments",
    "PacketMoments",
    "angular_momentum_moments",
    "free_density",
    "gaussian_1d",
    "gaussian_2d",
    "packet_energy",
    "packet_energy_2d",
    "packet_moments_1d",
    "spreading_time",
    "Expansion",
    "SpectralLine",
    "TimeScales",
    "time_scales",
]
