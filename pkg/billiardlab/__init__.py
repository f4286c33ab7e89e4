"""
billiardlab – wave packets in quantum billiards
===============================================

Expands Gaussian packets on the eigenstates of the infinite well, rectangle,
equilateral triangle and circle (plus their symmetric folds), evolves the
autocorrelation function, and derives revival and classical time scales.

>>> from billiardlab import load_scenario, run
"""

__version__ = "0.1.0"

from ._log import get_logger, reinitialize_logging, set_log_level
from .config import *
from .errors import *
from .geometry import *
from .core.evolution import AutocorrelationSeries, Peak, autocorrelation, density_on_grid, evolve_density
from .core.spectrum import Expansion, SpectralLine
from .core.timescales import TimeScales
from .wkb import Potential1D, action, classical_period, period_from_spectrum, wkb_energies
from .runner import crosscheck, orbits, run, scan_wall_proximity, spectrum  # noqa: E402

__all__ = [
    "__version__",
    "get_logger",
    "set_log_level",
    "reinitialize_logging",
    # Config
    "PhysicalUnits",
    "GaussianPacket1D",
    "GaussianPacket2D",
    "Scenario",
    "WallScanSpec",
    "load_scenario",
    "load_wall_scan",
    # Geometry
    "Billiard",
    "build_billiard",
    "Well1D",
    "RectBilliard",
    "IsocelesHalfSquare",
    "TriangleBilliard",
    "HalfTriangle",
    "CircBilliard",
    "HalfCircle",
    "ClosedOrbit",
    # Dynamics
    "Expansion",
    "SpectralLine",
    "AutocorrelationSeries",
    "Peak",
    "TimeScales",
    "autocorrelation",
    "density_on_grid",
    "evolve_density",
    # WKB
    "Potential1D",
    "action",
    "classical_period",
    "wkb_energies",
    "period_from_spectrum",
    # Runner
    "run",
    "orbits",
    "scan_wall_proximity",
    "crosscheck",
    "spectrum",
]
