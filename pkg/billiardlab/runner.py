"""Scenario orchestration: expansions, time series and the tables the CLI writes."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from . import __version__
from ._log import get_logger
from .analysis.peaks import detect_peaks
from .analysis.regions import probability_regions
from .common.checks import CheckResult, CheckStatus, CrossCheckReport
from .common.enums import Geometry
from .config.packets import GaussianPacket1D
from .config.scenario import DensitySpec, Scenario, WallScanSpec
from .core.evolution import AutocorrelationSeries, Peak, autocorrelation, density_on_grid
from .core.moments import angular_momentum_moments, packet_energy
from .core.spectrum import Expansion, SpectralLine
from .core.timescales import TimeScales
from .errors import NormalizationError, ScenarioValidationError, WallProximityWarning
from .experiments.sweep import grid_sweep, linear_grid
from .experiments.tables import ResultTable
from .geometry import (
    Billiard,
    Well1D,
    build_billiard,
    closed_orbits,
    isoceles_closed_orbits,
    square_closed_orbits,
    triangle_closed_orbits,
)
from .geometry.circle import ORBIT_P_MAX
from .geometry.orbits import ClosedOrbit

logger = get_logger(__name__)

QUANTUM_LABELS: dict[Geometry, tuple[str, ...]] = {
    Geometry.WELL1D: ("n",),
    Geometry.RECT: ("nx", "ny"),
    Geometry.SQUARE: ("nx", "ny"),
    Geometry.ISOCELES45: ("n", "m"),
    Geometry.TRIANGLE: ("m", "n"),
    Geometry.TRI306090: ("m", "n"),
    Geometry.CIRCLE: ("m", "n_r"),
    Geometry.HALFCIRCLE: ("m", "n_r"),
}
CIRCULAR = (Geometry.CIRCLE, Geometry.HALFCIRCLE)

NORM_TOLERANCE = 1e-3
ENERGY_TOLERANCE = {"polygon": 1e-3, "circle": 1e-2}
LZ_TOLERANCE = 1e-2
LZ2_TOLERANCE = 2e-2


def file_header(scenario: Scenario) -> list[str]:
    return [
        f"billiardlab {__version__}",
        f"scenario: {scenario.name}",
        f"scenario_hash: {scenario.fingerprint()}",
        f"geometry: {scenario.geometry.value}",
        f"units: {scenario.units.block()}",
    ]


def _library_header(*extra: str, units: Optional[str] = None) -> list[str]:
    lines = [f"billiardlab {__version__}", *extra]
    if units is not None:
        lines.append(f"units: {units}")
    return lines


def time_unit(scenario: Scenario, billiard: Billiard) -> float:
    """Length of one time-grid unit in absolute time.

    Raises:
        ScenarioValidationError: If the chosen unit does not exist for this
            geometry or packet.
    """
    unit = scenario.time_grid.unit
    if unit == "absolute":
        return 1.0
    if unit == "revival":
        value = billiard.revival_time()
        if value is None:
            raise ScenarioValidationError(
                [f"time_grid.unit: geometry '{scenario.geometry.value}' has no exact revival time; use 'tau' or 'absolute'"]
            )
        return value
    value = billiard.tau(scenario.packet)
    if not math.isfinite(value):
        raise ScenarioValidationError(["time_grid.unit: a packet at rest has no reference period τ"])
    return value


def time_grid(scenario: Scenario, billiard: Billiard) -> tuple[np.ndarray, float]:
    spec = scenario.time_grid
    scale = time_unit(scenario, billiard)
    return np.linspace(spec.start, spec.stop, spec.samples) * scale, scale


def expand_scenario(scenario: Scenario) -> tuple[Billiard, Expansion]:
    billiard = build_billiard(scenario)
    if isinstance(billiard, Well1D):
        expansion = billiard.expand(scenario.packet, scenario.window, scenario.coefficient_method)
    else:
        expansion = billiard.expand(scenario.packet, scenario.window)
    logger.info(
        f"{scenario.name}: {len(expansion)} states, captured probability {expansion.captured_probability:.10f}"
    )
    return billiard, expansion


def _expand_recording(scenario: Scenario) -> tuple[Billiard, Expansion, list[str]]:
    """Expand while collecting wall-proximity warnings; other warnings pass through."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", WallProximityWarning)
        billiard, expansion = expand_scenario(scenario)
    messages = []
    for w in caught:
        if issubclass(w.category, WallProximityWarning):
            messages.append(str(w.message))
        else:
            warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)
    return billiard, expansion, messages


def _quantum_columns(geometry: Geometry) -> list[tuple[str, str]]:
    return [(name, "") for name in QUANTUM_LABELS[geometry]]


def coefficient_table(expansion: Expansion, geometry: Geometry) -> ResultTable:
    table = ResultTable(
        "coefficients",
        [("label", ""), *_quantum_columns(geometry), ("parity", ""), ("energy", "hbar^2/mu L^2"),
         ("re", ""), ("im", ""), ("probability", "")],
    )
    names = QUANTUM_LABELS[geometry]
    rows = []
    for line, c in expansion.terms:
        row = {"label": line.label, "parity": line.parity.value, "energy": line.energy,
               "re": c.real, "im": c.imag, "probability": abs(c) ** 2}
        row.update(dict(zip(names, line.quantum_numbers)))
        rows.append(row)
    table.add_rows(rows)
    return table


def autocorrelation_table(series: AutocorrelationSeries, scale: float, unit: str) -> ResultTable:
    table = ResultTable("autocorrelation", [("t", "time"), ("t_scaled", unit), ("re", ""), ("im", ""), ("abs2", "")])
    table.add_rows({
        "t": series.times.tolist(),
        "t_scaled": (series.times / scale).tolist(),
        "re": series.values.real.tolist(),
        "im": series.values.imag.tolist(),
        "abs2": series.magnitudes_sq.tolist(),
    })
    return table


def peak_table(peaks: list[Peak], scale: float, unit: str) -> ResultTable:
    table = ResultTable("peaks", [("time", "time"), ("t_scaled", unit), ("abs2", "")])
    table.add_rows([{"time": p.time, "t_scaled": p.time / scale, "abs2": p.magnitude} for p in peaks])
    return table


def timescale_table(scales: TimeScales, billiard: Billiard, scenario: Scenario) -> ResultTable:
    table = ResultTable("timescales", [("quantity", ""), ("label", ""), ("time", "time")])
    rows = [{"quantity": q, "label": label, "time": t} for q, label, t in scales.rows()]
    exact = billiard.revival_time()
    if exact is not None:
        rows.append({"quantity": "revival_exact", "label": "", "time": exact})
    tau = billiard.tau(scenario.packet)
    if math.isfinite(tau):
        rows.append({"quantity": "tau", "label": "", "time": tau})
    table.add_rows(rows)
    return table


def density_table(billiard: Billiard, expansion: Expansion, spec: DensitySpec, scale: float, unit: str) -> ResultTable:
    box = billiard.bounding_box()
    axes = [np.linspace(lo, hi, spec.points) for lo, hi in box]
    if len(axes) == 1:
        points = axes[0]
        coords = {"x": axes[0]}
        table = ResultTable("density", [("t_scaled", unit), ("x", "length"), ("density", "1/length")])
    else:
        gx, gy = np.meshgrid(axes[0], axes[1], indexing="ij")
        points = np.column_stack([gx.ravel(), gy.ravel()])
        coords = {"x": points[:, 0], "y": points[:, 1]}
        table = ResultTable(
            "density", [("t_scaled", unit), ("x", "length"), ("y", "length"), ("density", "1/length^2")]
        )
    basis = billiard.basis()
    for t_scaled in spec.times:
        rho = density_on_grid(expansion, basis, points, t_scaled * scale)
        block = {"t_scaled": [float(t_scaled)] * rho.size, **{k: v.tolist() for k, v in coords.items()},
                 "density": rho.tolist()}
        table.add_rows(block)
    return table


def region_table(expansion: Expansion, billiard: Billiard) -> ResultTable:
    table = ResultTable("regions", [("level", ""), ("m", ""), ("n_r", ""), ("z", ""), ("probability", "")])
    hbar, mu = billiard.units.hbar, billiard.units.mu
    radius = billiard.R
    rows = []
    for level, states in probability_regions(expansion).items():
        for line, prob in states:
            m, n_r = line.quantum_numbers
            z = radius * math.sqrt(2.0 * mu * line.energy) / hbar
            rows.append({"level": level, "m": m, "n_r": n_r, "z": z, "probability": prob})
    table.add_rows(rows)
    return table


@dataclass
class RunResult:
    files: dict[str, Path]
    expansion: Expansion
    series: Optional[AutocorrelationSeries] = None
    peaks: list[Peak] = field(default_factory=list)
    scales: Optional[TimeScales] = None
    warnings: list[str] = field(default_factory=list)


_GNUPLOT_COLUMNS = {
    "coefficients": ("energy", "probability"),
    "autocorrelation": ("t_scaled", "abs2"),
    "peaks": ("t_scaled", "abs2"),
    "timescales": ("quantity", "time"),
    "density": ("x", "density"),
    "regions": ("m", "z"),
}


def run(scenario: Scenario, out_dir: Union[str, Path], gnuplot: bool = False) -> RunResult:
    """Compute every requested output of ``scenario`` and write one CSV per output.

    Output files are ``<name>_<output>.csv`` (and ``.dat`` two-column variants
    with ``gnuplot``), each headed by the library version, scenario hash and
    units block. Wall-proximity warnings are echoed in the headers.
    """
    out = Path(out_dir)
    billiard, expansion, messages = _expand_recording(scenario)
    header = file_header(scenario) + [f"warning: {m}" for m in messages]
    unit = scenario.time_grid.unit
    result = RunResult({}, expansion, warnings=messages)
    tables: dict[str, ResultTable] = {}

    if "coefficients" in scenario.outputs:
        tables["coefficients"] = coefficient_table(expansion, scenario.geometry)
    if {"autocorrelation", "peaks", "density"} & set(scenario.outputs):
        times, scale = time_grid(scenario, billiard)
        if {"autocorrelation", "peaks"} & set(scenario.outputs):
            series = autocorrelation(expansion, times)
            result.peaks = detect_peaks(series, scenario.peak_threshold)
            result.series = series.with_peaks(result.peaks)
            if "autocorrelation" in scenario.outputs:
                tables["autocorrelation"] = autocorrelation_table(result.series, scale, unit)
            if "peaks" in scenario.outputs:
                tables["peaks"] = peak_table(result.peaks, scale, unit)
        if "density" in scenario.outputs:
            tables["density"] = density_table(billiard, expansion, scenario.density, scale, unit)
    if "timescales" in scenario.outputs:
        result.scales = billiard.time_scales(scenario.packet)
        tables["timescales"] = timescale_table(result.scales, billiard, scenario)
    if "regions" in scenario.outputs:
        tables["regions"] = region_table(expansion, billiard)

    for name in scenario.outputs:
        table = tables[name]
        result.files[name] = table.write_csv(out / f"{scenario.name}_{name}.csv", header)
        if gnuplot:
            x, y = _GNUPLOT_COLUMNS[name]
            table.write_gnuplot(out / f"{scenario.name}_{name}.dat", x, y, header)
    return result


def _orbit_source(geometry: Geometry):
    if geometry in (Geometry.SQUARE, Geometry.RECT):
        return square_closed_orbits, "tau = 2a/v0; launch angle in degrees"
    if geometry is Geometry.ISOCELES45:
        return isoceles_closed_orbits, "tau = 2a/v0; launch angle in degrees"
    if geometry in (Geometry.TRIANGLE, Geometry.TRI306090):
        return triangle_closed_orbits, "tau = a/v0; launch angle in degrees from the (1,0) family"
    return closed_orbits, f"tau = R/v0; launch is R_min/R; families with 2*pi*q below the bound stop at p = {ORBIT_P_MAX}"


def orbit_table(geometry: Union[Geometry, str], bound: float) -> tuple[ResultTable, str]:
    """Closed orbits of ``geometry`` as a table rounded to two decimals, plus its convention note."""
    geometry = Geometry(geometry)
    if geometry is Geometry.WELL1D:
        raise ValueError("closed orbits are defined for 2D billiards only")
    source, convention = _orbit_source(geometry)
    orbits: list[ClosedOrbit] = source(bound)
    launch_units = "R" if geometry in CIRCULAR else "deg"
    length_units = "R" if geometry in CIRCULAR else "a"
    table = ResultTable(
        f"orbits_{geometry.value}",
        [("label", ""), ("p", ""), ("q", ""), ("length", length_units), ("period_over_tau", "tau"),
         ("launch", launch_units), ("recurrences", "tau"), ("primitive", ""), ("limit", ""), ("special", "")],
    )
    table.add_rows([
        {
            "label": o.label,
            "p": o.p,
            "q": o.q,
            "length": round(o.length, 2),
            "period_over_tau": round(o.period_over_tau, 2),
            "launch": round(o.launch, 2),
            "recurrences": " ".join(f"{r:.2f}" for r in o.recurrences),
            "primitive": o.primitive,
            "limit": o.limit,
            "special": o.special,
        }
        for o in orbits
    ])
    return table, convention


def orbits(geometry: Union[Geometry, str], bound: float, out_dir: Union[str, Path], gnuplot: bool = False) -> Path:
    table, convention = orbit_table(geometry, bound)
    header = _library_header(f"orbits: {Geometry(geometry).value}", f"bound: {bound!r}", convention)
    out = Path(out_dir)
    path = table.write_csv(out / f"{table.name}.csv", header)
    if gnuplot:
        table.write_gnuplot(out / f"{table.name}.dat", "period_over_tau", "launch", header)
    return path


def scan_wall_proximity(
    spec: WallScanSpec, out_dir: Optional[Union[str, Path]] = None, gnuplot: bool = False, quiet: Optional[bool] = None
) -> ResultTable:
    """Norm and energy captured by the lowest ``n_states`` well states as x0 moves toward and past a wall."""
    well = Well1D(a=spec.a, units=spec.units)
    grid = linear_grid(spec.start, spec.stop, spec.points)
    table = ResultTable(
        "wall_scan",
        [("x0_over_a", "a"), ("dx0_over_a", "a"), ("norm", ""), ("energy", "hbar^2/mu a^2"),
         ("energy_normalized", "hbar^2/mu a^2")],
    )
    for width in spec.widths:

        def point(x0_over_a: float, width: float = width) -> Expansion:
            packet = GaussianPacket1D(x0=x0_over_a * spec.a, p0=spec.p0, dx0=width * spec.a)
            return well.coefficients_exact(packet, spec.n_states)

        for x0_over_a, exp in grid_sweep(point, grid, desc=f"dx0={width:g}", quiet=quiet):
            norm = exp.captured_probability
            energy = exp.moment(1)
            table.add_rows({
                "x0_over_a": x0_over_a,
                "dx0_over_a": width,
                "norm": norm,
                "energy": energy,
                "energy_normalized": energy / norm if norm > 0 else float("nan"),
            })
    if out_dir is not None:
        header = _library_header(
            f"wall scan: a={spec.a!r} p0={spec.p0!r} n_states={spec.n_states}", units=spec.units.block()
        )
        out = Path(out_dir)
        table.write_csv(out / "wall_scan.csv", header)
        if gnuplot:
            for width in spec.widths:
                subset = ResultTable(table.name, list(table.columns.values()))
                subset.add_rows(table.data.filter(table.data["dx0_over_a"] == width))
                subset.write_gnuplot(out / f"wall_scan_dx0_{width:g}.dat", "x0_over_a", "norm", header)
    return table


def crosscheck(scenario: Scenario, out_dir: Optional[Union[str, Path]] = None) -> CrossCheckReport:
    """Compare expansion sums with the packet's analytic moments.

    Failures are report content; nothing is raised for a failing check.
    """
    report = CrossCheckReport(scenario=scenario.name, geometry=scenario.geometry.value)
    try:
        billiard, expansion, messages = _expand_recording(scenario)
    except NormalizationError as e:
        report.add(CheckResult(name="norm", expected=1.0, observed=e.captured or math.nan,
                               tolerance=NORM_TOLERANCE, note="expansion over-normalized"))
        _write_report(report, scenario, out_dir)
        return report
    report.warnings.extend(messages)

    captured = expansion.captured_probability
    norm = report.add(CheckResult(name="norm", expected=1.0, observed=captured, tolerance=NORM_TOLERANCE))
    if norm.status is CheckStatus.FAIL:
        norm.note = f"deficit {1.0 - captured:.3e}"

    family = "circle" if scenario.geometry in CIRCULAR else "polygon"
    report.add(CheckResult(name="energy", expected=packet_energy(scenario.packet, scenario.units),
                           observed=expansion.moment(1), tolerance=ENERGY_TOLERANCE[family]))

    if scenario.geometry is Geometry.CIRCLE:
        moments = angular_momentum_moments(scenario.packet, scenario.units)
        report.add(CheckResult(name="lz", expected=moments.mean, observed=expansion.angular_moment(1),
                               tolerance=LZ_TOLERANCE))
        report.add(CheckResult(name="lz2", expected=moments.mean_sq, observed=expansion.angular_moment(2),
                               tolerance=LZ2_TOLERANCE))
    logger.info(f"crosscheck {scenario.name}: {'pass' if report.passed else 'FAIL'}")
    _write_report(report, scenario, out_dir)
    return report


def _write_report(report: CrossCheckReport, scenario: Scenario, out_dir: Optional[Union[str, Path]]) -> None:
    if out_dir is None:
        return
    table = ResultTable(
        "crosscheck",
        [("check", ""), ("expected", ""), ("observed", ""), ("deviation", ""), ("tolerance", ""),
         ("status", ""), ("note", "")],
    )
    table.add_rows([
        {"check": c.name, "expected": c.expected, "observed": c.observed, "deviation": c.deviation,
         "tolerance": c.tolerance, "status": c.status.value, "note": c.note or ""}
        for c in report.checks
    ])
    header = file_header(scenario) + [f"warning: {w}" for w in report.warnings]
    table.write_csv(Path(out_dir) / f"{scenario.name}_crosscheck.csv", header)


def spectrum(scenario: Scenario, count: int, out_dir: Optional[Union[str, Path]] = None) -> ResultTable:
    """The ``count`` lowest eigenvalues of the scenario's billiard."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    billiard = build_billiard(scenario)
    lines: list[SpectralLine] = billiard.lowest_lines(count)
    names = QUANTUM_LABELS[scenario.geometry]
    table = ResultTable("spectrum", [("index", ""), ("label", ""), *_quantum_columns(scenario.geometry),
                                     ("parity", ""), ("energy", "hbar^2/mu L^2")])
    rows = []
    for i, line in enumerate(lines):
        row = {"index": i, "label": line.label, "parity": line.parity.value, "energy": line.energy}
        row.update(dict(zip(names, line.quantum_numbers)))
        rows.append(row)
    table.add_rows(rows)
    if out_dir is not None:
        table.write_csv(Path(out_dir) / f"{scenario.name}_spectrum.csv", file_header(scenario))
    return table
