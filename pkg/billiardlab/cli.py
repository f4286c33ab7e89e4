# billiardlab/cli.py
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Iterator, Optional

import rich
import typer
from rich.table import Table

from billiardlab import __version__, runner
from billiardlab.config import WallScanSpec, load_scenario, load_wall_scan
from billiardlab.errors import (
    AccuracyError,
    EmptyExpansionError,
    NormalizationError,
    NumericalError,
    RootIsolationError,
    ScenarioValidationError,
    WKBSolverError,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_ACCURACY = 2
EXIT_IO = 3

_NUMERICAL = (AccuracyError, NumericalError, RootIsolationError, WKBSolverError, NormalizationError, EmptyExpansionError)


def exit_code_for(exc: BaseException) -> int:
    """Map a library exception to the process exit code."""
    if isinstance(exc, _NUMERICAL):
        return EXIT_ACCURACY
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_VALIDATION


@contextmanager
def _guarded() -> Iterator[None]:
    try:
        yield
    except ScenarioValidationError as e:
        rich.print(f"[bold red]Invalid scenario:[/bold red] {e}")
        raise typer.Exit(code=EXIT_VALIDATION)
    except (*_NUMERICAL, OSError, ValueError, IndexError) as e:
        code = exit_code_for(e)
        label = {EXIT_ACCURACY: "Numerical failure", EXIT_IO: "I/O error"}.get(code, "Invalid input")
        rich.print(f"[bold red]{label}:[/bold red] {e}")
        raise typer.Exit(code=code)


def version_callback(value: bool):
    if value:
        rich.print(f"billiardlab version {__version__}")
        raise typer.Exit()


app = typer.Typer(help="billiardlab: wave packets, revivals and closed orbits in quantum billiards.")


@app.callback()
def main_callback(
    version: Optional[bool] = typer.Option(
        None, "--version", callback=version_callback, is_eager=True, help="Show version and exit."
    )
):
    """billiardlab: wave packets, revivals and closed orbits in quantum billiards."""
    pass


OutOption = Annotated[Path, typer.Option("--out", "-o", help="Directory for result files.")]
GnuplotOption = Annotated[bool, typer.Option("--gnuplot", help="Also write two-column .dat files.")]
QuietOption = Annotated[bool, typer.Option("--quiet", "-q", help="No progress bars or summaries.")]


@app.command("run")
def run_command(
    scenario: Annotated[Path, typer.Argument(help="Scenario YAML file.")],
    out: OutOption = Path("results"),
    gnuplot: GnuplotOption = False,
    quiet: QuietOption = False,
):
    """Expand the scenario's packet and write every requested output."""
    with _guarded():
        spec = load_scenario(scenario)
        result = runner.run(spec, out, gnuplot=gnuplot)
    if quiet:
        return
    for message in result.warnings:
        rich.print(f"[yellow]warning:[/yellow] {message}")
    rich.print(
        f"[green]{spec.name}[/green]: {len(result.expansion)} states, "
        f"captured probability {result.expansion.captured_probability:.8f}"
    )
    for name, path in result.files.items():
        rich.print(f"  {name}: {path}")


@app.command("orbits")
def orbits_command(
    geometry: Annotated[str, typer.Argument(help="square, rect, isoceles45, triangle, tri306090, circle or halfcircle.")],
    bound: Annotated[float, typer.Option("--bound", help="Longest orbit kept, in units of a or R.")] = 10.0,
    out: OutOption = Path("results"),
    gnuplot: GnuplotOption = False,
    quiet: QuietOption = False,
):
    """Enumerate closed classical orbits up to a length bound."""
    with _guarded():
        path = runner.orbits(geometry, bound, out, gnuplot=gnuplot)
    if not quiet:
        rich.print(f"orbits written to {path}")


@app.command("scan-wall")
def scan_wall_command(
    config: Annotated[Optional[Path], typer.Argument(help="Optional wall-scan YAML; defaults apply otherwise.")] = None,
    out: OutOption = Path("results"),
    gnuplot: GnuplotOption = False,
    quiet: QuietOption = False,
):
    """Norm and energy of a 1D packet expansion as the packet moves onto the wall."""
    with _guarded():
        spec = load_wall_scan(config) if config is not None else WallScanSpec()
        table = runner.scan_wall_proximity(spec, out, gnuplot=gnuplot, quiet=quiet)
    if not quiet:
        rich.print(f"wall scan: {len(table)} rows written to {out / 'wall_scan.csv'}")


@app.command("crosscheck")
def crosscheck_command(
    scenario: Annotated[Path, typer.Argument(help="Scenario YAML file.")],
    out: OutOption = Path("results"),
    quiet: QuietOption = False,
):
    """Compare expansion norm, energy and angular momentum with analytic packet values."""
    with _guarded():
        report = runner.crosscheck(load_scenario(scenario), out)
    if quiet:
        return
    table = Table(title=f"crosscheck: {report.scenario} ({report.geometry})")
    for column in ("check", "expected", "observed", "deviation", "tolerance", "status"):
        table.add_column(column)
    for check in report.checks:
        colour = "green" if check.status.value == "PASS" else "red"
        table.add_row(
            check.name,
            f"{check.expected:.6g}",
            f"{check.observed:.6g}",
            f"{check.deviation:.2e}",
            f"{check.tolerance:.0e}",
            f"[{colour}]{check.status.value}[/{colour}]",
        )
    rich.print(table)
    for message in report.warnings:
        rich.print(f"[yellow]warning:[/yellow] {message}")


@app.command("spectrum")
def spectrum_command(
    scenario: Annotated[Path, typer.Argument(help="Scenario YAML file.")],
    count: Annotated[int, typer.Option("--count", "-n", help="Number of lowest levels.")] = 20,
    out: OutOption = Path("results"),
    quiet: QuietOption = False,
):
    """List the lowest eigenvalues of the scenario's billiard."""
    with _guarded():
        table = runner.spectrum(load_scenario(scenario), count, out)
    if quiet:
        return
    listing = Table(title="spectrum")
    for column in ("index", "label", "parity", "energy"):
        listing.add_column(column)
    for row in table:
        listing.add_row(str(row["index"]), row["label"], row["parity"], f"{row['energy']:.8g}")
    rich.print(listing)


def main():
    app()


if __name__ == "__main__":
    main()
