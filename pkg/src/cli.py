"""Command-line interface for the spiked-oscillator spectrum toolkit."""

import json
import math
from dataclasses import dataclass
from pathlib import Path

import click
from dotenv import load_dotenv
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from config.settings import Settings
from src.errors import ConfigError, TraError
from src.pps.levels import EnergySpectrum
from src.reproduce import METHODS, TABLES, TableReproducer, compute_spectrum, run_checks
from src.tra.params import PhysicalParams
from src.utils.logging import setup_logging
from src.wavefn import RadialGrid, fig1_data, table_header

console = Console()


def _load_settings(**overrides) -> Settings:
    load_dotenv(Path.cwd() / ".env", override=True)
    try:
        settings = Settings()
        if overrides:
            settings = Settings(**{**settings.model_dump(), **overrides})
    except ValidationError as exc:
        raise ConfigError(f"invalid settings: {exc.errors()[0]['loc'][0]}: {exc.errors()[0]['msg']}") from exc
    return settings


def _make_progress():
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    )


def _physical_params(omega: float, a: float | None, a2: float | None, ell: int) -> PhysicalParams:
    if (a is None) == (a2 is None):
        raise click.UsageError("give exactly one of --a or --a2")
    if a2 is not None:
        if a2 < 0:
            raise click.BadParameter("a^2 must be non-negative", param_hint="--a2")
        a = math.sqrt(a2)
    return PhysicalParams(omega=omega, a=a, ell=ell)


def _usage(exc: ConfigError):
    raise click.UsageError(str(exc)) from exc


def _fail(exc: TraError):
    console.print(f"[red]Error:[/red] {escape(str(exc))}")
    raise SystemExit(1)


def _write(text: str, output: str | None, what: str):
    if output is None:
        click.echo(text, nl=False)
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    console.print(f"[green]✓[/green] {what} written to [bold]{path}[/bold]")


def spectrum_csv(spectrum: EnergySpectrum) -> str:
    lines = ["k,E,dE"]
    lines += [f"{k},{E:.9f},{dE:.9f}" for k, E, dE in spectrum.as_rows()]
    return "\n".join(lines) + "\n"


def spectrum_json(spectrum: EnergySpectrum) -> str:
    return json.dumps(spectrum.to_dict(), indent=2) + "\n"


@dataclass(frozen=True)
class RunConfig:
    """Everything one ``spectrum`` run needs, validated before dispatch."""

    method: str
    params: PhysicalParams
    settings: Settings
    levels: int = 10
    E_max: float | None = None
    size: int | None = None
    N: int | None = None
    window: tuple[float, float] | None = None
    lambda_ratio: float | None = None
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}")
        if self.levels < 1:
            raise ConfigError("--levels must be at least 1")
        if self.method == "det" and self.N is None:
            raise ConfigError("--method det needs --n")
        if self.method != "det" and (self.N is not None or self.window is not None):
            raise ConfigError("--n and --window only apply to --method det")
        if self.window is not None and not self.window[0] < self.window[1]:
            raise ConfigError(f"empty window {self.window}")
        if self.size is not None and self.size < 2:
            raise ConfigError("--size must be at least 2")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.output_format!r}")

    def run(self) -> EnergySpectrum:
        return compute_spectrum(
            self.method,
            self.params,
            self.settings,
            levels=self.levels,
            E_max=self.E_max,
            size=self.size,
            N=self.N,
            window=self.window,
            lambda_ratio=self.lambda_ratio,
        )


def _physics_options(f):
    f = click.option("--ell", "-l", type=int, required=True, help="Angular momentum quantum number")(f)
    f = click.option("--a2", type=float, default=None, help="Squared singularity strength a^2")(f)
    f = click.option("--a", "a", type=float, default=None, help="Singularity strength a")(f)
    f = click.option("--omega", type=float, default=1.0, show_default=True, help="Oscillator frequency")(f)
    return f


@click.group(invoke_without_command=True)
@click.pass_context
def cli(ctx):
    """Bound states of the spiked isotropic oscillator.

    \b
    V(r) = l(l+1)/2r^2 + omega^2 r^2/2 + a^2/2r^4, atomic units.

    \b
    METHODS:
      pps     - energy-polynomial curves fitted by continued fractions
      det     - roots of the fixed-size recursion determinant
      matrix  - Hamiltonian in a Laguerre oscillator basis

    \b
    COMMANDS:
      spectrum          - Compute the lowest bound-state energies
      wavefunction      - Export the finite-series wavefunctions
      reproduce-tables  - Recompute the reference tables and compare
      check             - Run the invariant self-check suite

    \b
    Settings come from TRA_* environment variables or a .env file.
    Run 'spiked-tra COMMAND --help' for details on each command.
    """
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(0)


@cli.command()
@_physics_options
@click.option("--method", "-m", type=click.Choice(METHODS), default="pps", show_default=True)
@click.option("--levels", type=click.IntRange(min=1), default=10, show_default=True, help="Number of levels")
@click.option("--emax", type=float, default=None, help="Top of the PPS energy window")
@click.option("--fit-points", type=click.IntRange(min=2), default=None, help="PPS grid size M")
@click.option("--size", type=click.IntRange(min=2), default=None, help="Laguerre basis size")
@click.option("--lambda2", type=float, default=None, help="Basis scale lambda^2 (default omega)")
@click.option("--n", "N", type=int, default=None, help="Determinant matrix size index N")
@click.option("--window", nargs=2, type=float, default=None, help="Determinant energy window LO HI")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--output", "-o", default=None, help="Output file (default: stdout)")
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
def spectrum(omega, a, a2, ell, method, levels, emax, fit_points, size, lambda2, N, window, output_format, output, verbose):
    """Compute the lowest bound-state energies and their shifts.

    \b
    Writes one row per level: k, E_k and dE_k = E_k - omega(2k + l + 3/2),
    nine decimals.

    \b
    Examples:
      spiked-tra spectrum --method pps --a 0.5 --ell 5 --emax 26 --fit-points 100
      spiked-tra spectrum --method matrix --a2 1.0 --ell 40 --size 100
      spiked-tra spectrum --method det --a 0.5 --ell 5 --n 0 --window 6 7
    """
    setup_logging(verbose)
    try:
        p = _physical_params(omega, a, a2, ell)
        overrides = {"fit_points": fit_points} if fit_points is not None else {}
        config = RunConfig(
            method=method,
            params=p,
            settings=_load_settings(**overrides),
            levels=levels,
            E_max=emax,
            size=size,
            N=N,
            window=tuple(window) if window else None,
            lambda_ratio=None if lambda2 is None else lambda2 / omega,
            output_format=output_format,
            output_path=output,
        )
    except ConfigError as exc:
        _usage(exc)

    try:
        with _make_progress() as progress:
            progress.add_task(f"Computing {method} spectrum...", total=None)
            result = config.run()
    except TraError as exc:
        _fail(exc)

    if result.skipped:
        console.print(f"[yellow]Unresolved levels:[/yellow] {', '.join(map(str, result.skipped))}")
    text = spectrum_csv(result) if output_format == "csv" else spectrum_json(result)
    _write(text, output, f"{len(result.levels)} levels")


@cli.command()
@_physics_options
@click.option("--method", "-m", type=click.Choice(METHODS), default="pps", show_default=True)
@click.option("--count", type=click.IntRange(min=1), default=6, show_default=True, help="Number of states")
@click.option("--n", "N", type=int, default=None, help="Determinant size index (det method)")
@click.option("--output", "-o", default=None, help="Output CSV file (default: stdout)")
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
def wavefunction(omega, a, a2, ell, method, count, N, output, verbose):
    """Export the un-normalized wavefunctions of the lowest states.

    \b
    Columns r, psi0, psi1, ... on the radial grid set by TRA_WAVE_R_MIN,
    TRA_WAVE_R_MAX and TRA_WAVE_POINTS (r in units of 1/sqrt(omega)).

    \b
    Example:
      spiked-tra wavefunction --a 0.5 --ell 5 -o fig1.csv
    """
    setup_logging(verbose)
    try:
        p = _physical_params(omega, a, a2, ell)
        settings = _load_settings()
        if method == "det" and N is None:
            raise ConfigError("--method det needs --n")
    except ConfigError as exc:
        _usage(exc)

    try:
        grid = RadialGrid.uniform(settings.wave_r_min, settings.wave_r_max, settings.wave_points, p.omega)
        with _make_progress() as progress:
            task = progress.add_task(f"Computing {method} spectrum...", total=None)
            levels = compute_spectrum(method, p, settings, levels=count, N=N)
            progress.update(task, description="Evaluating wavefunctions...")
            table = fig1_data(p, levels, grid=grid, count=count)
    except TraError as exc:
        _fail(exc)

    lines = [",".join(table_header(count))]
    lines += [",".join(f"{v:.9e}" for v in row) for row in table]
    _write("\n".join(lines) + "\n", output, f"{count} wavefunctions")


def _report_table(report) -> Table:
    table = Table(title=report.summary)
    for name in ("row", "column", "computed", "reference", "deviation", "ok"):
        table.add_column(name, justify="right" if name not in ("row", "column") else "left")
    for c in report.cells:
        table.add_row(
            c.row,
            c.column,
            "-" if c.computed is None else f"{c.computed:.9f}",
            f"{c.reference:.9f}",
            "-" if c.computed is None else f"{c.deviation:.1e}",
            "[green]✓[/green]" if c.passed else f"[red]✗[/red] {escape(c.error)}",
        )
    return table


@cli.command("reproduce-tables")
@click.option("--table", "tables", type=click.Choice([str(t) for t in TABLES]), multiple=True, help="Table(s) to reproduce (default: all)")
@click.option("--strict", is_flag=True, help="Exit 1 if any cell misses its tolerance")
@click.option("--no-cache", is_flag=True, help="Recompute instead of reusing cached spectra")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
def reproduce_tables(tables, strict, no_cache, output_format, verbose):
    """Recompute the reference tables and compare cell by cell.

    \b
    1 - PPS energy shifts, a = 0.5, l = 3..7
    2 - determinant roots at N = 0, 1, 2, 5, 10 (l = 5)
    3 - Laguerre-basis matrix, M = 100, l = 3..7
    4 - lowest three energies, a^2 = 0.001 and 1.0, l = 3, 4, 5, 10, 40

    \b
    Computed spectra are cached on disk (TRA_CACHE_DIR).

    \b
    Examples:
      spiked-tra reproduce-tables --table 2
      spiked-tra reproduce-tables --strict --no-cache
    """
    setup_logging(verbose)
    try:
        settings = _load_settings()
    except ConfigError as exc:
        _usage(exc)
    which = [int(t) for t in tables] or list(TABLES)

    reports = []
    with _make_progress() as progress:
        task = progress.add_task("Starting...", total=None)

        def on_progress(msg: str):
            progress.update(task, description=msg)

        reproducer = TableReproducer(settings, use_cache=settings.use_cache and not no_cache, progress_callback=on_progress)
        for t in which:
            progress.update(task, description=f"Table {t}...")
            reports.append(reproducer.run(t))

    if output_format == "json":
        click.echo(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            console.print(_report_table(r))
        for r in reports:
            mark = "[green]✓[/green]" if r.passed else "[red]✗[/red]"
            console.print(f"{mark} {r.summary} (max deviation {r.max_deviation:.1e})")

    if strict and not all(r.passed for r in reports):
        raise SystemExit(1)


@cli.command()
@click.option("--group", "groups", type=click.Choice(["identities", "oracle", "cross-method"]), multiple=True, help="Only run these groups")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
def check(groups, output_format, verbose):
    """Run the invariant self-check suite.

    \b
    identities    - Bessel polynomial identities, quadrature, recursions
    oracle        - pure oscillator spectrum, ground-state Schrodinger residual
    cross-method  - PPS against the Laguerre-basis matrix
    """
    setup_logging(verbose)
    try:
        settings = _load_settings()
    except ConfigError as exc:
        _usage(exc)
    with _make_progress() as progress:
        progress.add_task("Running checks...", total=None)
        results = run_checks(settings, groups=tuple(groups) or None)

    if output_format == "json":
        click.echo(json.dumps([r.to_dict() for r in results], indent=2))
        return
    for r in results:
        mark = "[green]✓[/green]" if r.passed else "[red]✗[/red]"
        detail = escape(r.error) or f"{r.value:.2e} <= {r.limit:.0e}"
        console.print(f"{mark} {r.name} ({r.group}): {detail}")
    passed = sum(r.passed for r in results)
    console.print(f"\n{passed}/{len(results)} checks passed")


if __name__ == "__main__":
    cli()
