from __future__ import annotations

import math

import polars as pl
import pytest

from billiardlab import __version__, runner
from billiardlab.common.checks import CheckStatus
from billiardlab.config import Scenario, WallScanSpec
from billiardlab.errors import ScenarioValidationError


def _read(path):
    return pl.read_csv(path, comment_prefix="#")


def _header(path):
    return [line for line in path.read_text().splitlines() if line.startswith("#")]


@pytest.fixture()
def well_scenario(well_scenario_dict) -> Scenario:
    return Scenario.model_validate(well_scenario_dict)


@pytest.fixture()
def circle_scenario_dict() -> dict:
    return {
        "name": "circle_off_centre",
        "geometry": "circle",
        "packet": {"x0": 0.3, "y0": 0.0, "p0x": 0.0, "p0y": 30.0, "dx0": 0.05},
        "time_grid": {"stop": 2.0, "samples": 201, "unit": "tau"},
        "outputs": ["coefficients", "regions"],
    }


@pytest.fixture()
def circle_scenario(circle_scenario_dict) -> Scenario:
    return Scenario.model_validate(circle_scenario_dict)


def test_run_writes_one_file_per_output(well_scenario, tmp_path):
    result = runner.run(well_scenario, tmp_path)
    assert set(result.files) == {"coefficients", "autocorrelation", "peaks", "timescales"}
    for name, path in result.files.items():
        assert path == tmp_path / f"well_centre_{name}.csv"
        assert path.exists()
    assert result.warnings == []

    header = _header(result.files["autocorrelation"])
    assert header[0] == f"# billiardlab {__version__}"
    assert header[1] == "# scenario: well_centre"
    assert header[2] == f"# scenario_hash: {well_scenario.fingerprint()}"
    assert header[3] == "# geometry: well1d"
    assert header[4] == f"# units: {well_scenario.units.block()}"
    assert header[5].startswith("# columns: t[time], t_scaled[revival]")


def test_run_tables(well_scenario, tmp_path):
    result = runner.run(well_scenario, tmp_path)
    coefficients = _read(result.files["coefficients"])
    assert coefficients["probability"].sum() == pytest.approx(1.0, abs=1e-8)
    assert set(coefficients.columns) >= {"label", "n", "energy", "re", "im", "probability"}

    series = _read(result.files["autocorrelation"])
    assert series.height == 801
    assert series["abs2"][0] == pytest.approx(1.0, abs=1e-8)
    assert series["abs2"][-1] == pytest.approx(1.0, abs=1e-8)

    scales = _read(result.files["timescales"])
    exact = scales.filter(pl.col("quantity") == "revival_exact")["time"]
    assert exact.len() == 1
    assert exact[0] == pytest.approx(2.0 / math.pi)
    # a packet at rest has no τ row
    assert scales.filter(pl.col("quantity") == "tau").is_empty()


def test_centred_packet_revives_every_eighth(well_scenario, tmp_path):
    # only odd n are populated and n² ≡ 1 (mod 8)
    result = runner.run(well_scenario, tmp_path)
    peaks = _read(result.files["peaks"])
    for k in range(1, 8):
        near = peaks.filter((pl.col("t_scaled") - k / 8.0).abs() < 1e-3)
        assert near.height == 1, k
        assert near["abs2"][0] == pytest.approx(1.0, abs=1e-6)


def test_gnuplot_files(well_scenario, tmp_path):
    runner.run(well_scenario, tmp_path, gnuplot=True)
    dat = tmp_path / "well_centre_autocorrelation.dat"
    lines = dat.read_text().splitlines()
    data = [line for line in lines if not line.startswith("#")]
    assert len(data) == 801
    assert len(data[0].split()) == 2


def test_wall_warning_reaches_the_header(well_scenario_dict, tmp_path):
    well_scenario_dict["packet"]["x0"] = 0.9
    result = runner.run(Scenario.model_validate(well_scenario_dict), tmp_path)
    assert len(result.warnings) == 1
    assert result.warnings[0].startswith("well1d: packet centre")
    assert any(line.startswith("# warning: well1d") for line in _header(result.files["coefficients"]))


def test_density_snapshot(well_scenario_dict, tmp_path):
    well_scenario_dict.update(
        outputs=["density"],
        density={"times": [0.0], "points": 11},
        time_grid={"stop": 1.0, "unit": "absolute"},
    )
    result = runner.run(Scenario.model_validate(well_scenario_dict), tmp_path)
    density = _read(result.files["density"])
    assert density.height == 11
    centre = density.filter((pl.col("x") - 0.5).abs() < 1e-9)["density"][0]
    assert centre == pytest.approx(1.0 / (0.05 * math.sqrt(2.0 * math.pi)), rel=1e-5)
    assert density["density"][0] == pytest.approx(0.0, abs=1e-12)


def test_regions(circle_scenario, tmp_path):
    result = runner.run(circle_scenario, tmp_path)
    regions = _read(result.files["regions"])
    levels = sorted(set(regions["level"].to_list()))
    assert levels == pytest.approx([0.68, 0.997])
    inner = regions.filter(pl.col("level") < 0.9)
    outer = regions.filter(pl.col("level") > 0.9)
    assert 0 < inner.height < outer.height
    assert inner["probability"].sum() >= 0.68 * 0.999


def test_revival_unit_needs_a_revival(circle_scenario_dict, tmp_path):
    circle_scenario_dict["outputs"] = ["autocorrelation"]
    circle_scenario_dict["time_grid"]["unit"] = "revival"
    with pytest.raises(ScenarioValidationError):
        runner.run(Scenario.model_validate(circle_scenario_dict), tmp_path)


def test_tau_unit_needs_a_moving_packet(well_scenario_dict, tmp_path):
    well_scenario_dict["time_grid"]["unit"] = "tau"
    with pytest.raises(ScenarioValidationError):
        runner.run(Scenario.model_validate(well_scenario_dict), tmp_path)


def test_orbits_file(tmp_path):
    path = runner.orbits("square", 10.0, tmp_path)
    assert path == tmp_path / "orbits_square.csv"
    table = _read(path)
    assert table.height == 25
    row = table.filter((pl.col("p") == 2) & (pl.col("q") == 1))
    assert row["period_over_tau"][0] == pytest.approx(2.24)
    assert row["launch"][0] == pytest.approx(26.57)
    assert any("tau = 2a/v0" in line for line in _header(path))


def test_circle_orbit_table():
    table, convention = runner.orbit_table("circle", 7.0)
    assert len(table) == 13
    assert "R_min/R" in convention
    rows = {row["label"]: row for row in table}
    assert rows["(3,1)"]["length"] == pytest.approx(5.2)
    assert rows["(inf,1)"]["limit"] is True


def test_well_has_no_orbits():
    with pytest.raises(ValueError):
        runner.orbit_table("well1d", 10.0)


@pytest.fixture(scope="module")
def wall_scan():
    spec = WallScanSpec(start=0.5, stop=1.25, points=31)
    return runner.scan_wall_proximity(spec, quiet=True).data


def _at(frame: pl.DataFrame, width: float, x0: float) -> dict:
    rows = frame.filter((pl.col("dx0_over_a") == width) & ((pl.col("x0_over_a") - x0).abs() < 1e-9))
    assert rows.height == 1
    return rows.to_dicts()[0]


def test_wall_scan_norm_decays(wall_scan):
    for width in (0.05, 0.1):
        curve = wall_scan.filter(pl.col("dx0_over_a") == width).sort("x0_over_a")
        norms = curve.filter(pl.col("x0_over_a") <= 1.2 + 1e-9)["norm"].to_list()
        assert all(b <= a + 1e-9 for a, b in zip(norms, norms[1:]))
        assert _at(wall_scan, width, 1.25)["norm"] < 0.01
    assert _at(wall_scan, 0.05, 0.5)["norm"] == pytest.approx(1.0, abs=1e-6)


def test_wider_packet_feels_the_wall_first(wall_scan):
    assert _at(wall_scan, 0.1, 0.75)["norm"] < _at(wall_scan, 0.05, 0.75)["norm"] - 1e-3


def test_wall_scan_energy_grows(wall_scan):
    centre = _at(wall_scan, 0.05, 0.5)["energy"]
    assert centre == pytest.approx(100.0, rel=1e-4)
    assert _at(wall_scan, 0.05, 0.95)["energy"] > 1.1 * centre


def test_wall_scan_files(tmp_path):
    spec = WallScanSpec(start=0.5, stop=1.0, points=6, n_states=20)
    table = runner.scan_wall_proximity(spec, tmp_path, gnuplot=True, quiet=True)
    assert len(table) == 12
    assert _read(tmp_path / "wall_scan.csv").height == 12
    for width in ("0.05", "0.1"):
        dat = tmp_path / f"wall_scan_dx0_{width}.dat"
        data = [line for line in dat.read_text().splitlines() if not line.startswith("#")]
        assert len(data) == 6


def test_crosscheck_passes(well_scenario, tmp_path):
    report = runner.crosscheck(well_scenario, tmp_path)
    assert report.passed
    assert [c.name for c in report.checks] == ["norm", "energy"]
    assert report.checks[1].expected == pytest.approx(100.0)
    written = _read(tmp_path / "well_centre_crosscheck.csv")
    assert written["status"].to_list() == ["PASS", "PASS"]


def test_crosscheck_circle(circle_scenario):
    report = runner.crosscheck(circle_scenario)
    assert [c.name for c in report.checks] == ["norm", "energy", "lz", "lz2"]
    assert report.passed
    assert report.checks[2].expected == pytest.approx(9.0)


def test_crosscheck_reports_a_deficit(well_scenario_dict):
    well_scenario_dict["packet"]["x0"] = 0.9
    report = runner.crosscheck(Scenario.model_validate(well_scenario_dict))
    assert not report.passed
    norm = report.checks[0]
    assert norm.status is CheckStatus.FAIL
    assert norm.observed < 0.9
    assert norm.note.startswith("deficit")
    assert report.warnings


def test_spectrum(well_scenario, tmp_path):
    table = runner.spectrum(well_scenario, 5, tmp_path)
    assert table.data["energy"].to_list() == pytest.approx([(n * math.pi) ** 2 for n in range(1, 6)])
    assert table.data["n"].to_list() == [1, 2, 3, 4, 5]
    assert (tmp_path / "well_centre_spectrum.csv").exists()
    with pytest.raises(ValueError):
        runner.spectrum(well_scenario, 0)


def test_triangle_spectrum():
    scenario = Scenario.model_validate({
        "geometry": "triangle",
        "packet": {"x0": 0.0, "y0": 0.4, "p0x": 10.0, "p0y": 0.0, "dx0": 0.04},
        "outputs": ["coefficients"],
    })
    table = runner.spectrum(scenario, 3)
    assert table.data["parity"].to_list() == ["zero", "minus", "plus"]
    assert table.data["m"].to_list() == [2, 3, 3]
