"""
Thermotopo - Command-Line Interface

Commands reproduce each result as a data file (CSV or JSON). Exit codes:
0 success, 2 configuration error, 3 numerical error, 4 resource cap.
"""

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Type, TypeVar

import structlog
import typer
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError
from rich.console import Console
from rich.table import Table

from thermotopo import __version__
from thermotopo.core.config import settings
from thermotopo.core.exceptions import ConfigurationError, ThermoTopoError
from thermotopo.core.loader import config_errors, load_config
from thermotopo.core.logging import setup_logging
from thermotopo.core.schemas import (
    BandsConfig,
    CommandName,
    HofstadterHubbardConfig,
    LindbladConfig,
    ToyConfig,
)
from thermotopo.lindblad import (
    bell_measurement_demo,
    build_liouvillian,
    damping_gap_and_ness,
    hamiltonian_from_terms,
    jumps_from_terms,
    lcp_equivalence_demo,
    perturbation_ratio,
    trace_residual,
)
from thermotopo.models import FockBasis, build_many_body_hamiltonian, get_bloch_model, get_lattice_spec
from thermotopo.observability.metrics import COMMAND_DURATION, SWEEP_POINTS_TOTAL, write_metrics
from thermotopo.reports.writers import write_csv, write_json
from thermotopo.spectral import (
    eigendecompose,
    manifold_report,
    scan_spectrum,
    thermal_ensemble,
    thermal_spectral_structure,
)
from thermotopo.topology import TwistGrid, all_band_cherns, compute_chern
from thermotopo.toymodel import (
    ToyBandModel,
    classify_toy_phase,
    phase_diagram,
    sampled_gap,
    toy_gap,
)

logger = structlog.get_logger()
console = Console(stderr=True)

SchemaT = TypeVar("SchemaT", bound=BaseModel)

app = typer.Typer(
    name="thermotopo",
    help="Spectral structure and manifold Chern numbers of thermal and quasi-thermal states.",
    no_args_is_help=True,
)
toy_app = typer.Typer(help="Two-band toy model.", no_args_is_help=True)
hh_app = typer.Typer(help="Interacting Hofstadter-Hubbard model.", no_args_is_help=True)
bands_app = typer.Typer(help="Single-particle band topology.", no_args_is_help=True)
lindblad_app = typer.Typer(help="Lindblad steady states and local channels.", no_args_is_help=True)
app.add_typer(toy_app, name="toy")
app.add_typer(hh_app, name="hh")
app.add_typer(bands_app, name="bands")
app.add_typer(lindblad_app, name="lindblad")

ConfigOption = typer.Option(None, "--config", "-c", help="JSON (or YAML) configuration file")
OutOption = typer.Option(None, "--out", "-o", help="Output file (stdout when omitted)")


@dataclass
class CliState:
    """Global options shared by every command."""

    config: Optional[Path] = None
    out: Optional[Path] = None
    workers: Optional[int] = None
    grid: Optional[TwistGrid] = None
    seed: Optional[int] = None


def _state(ctx: typer.Context) -> CliState:
    return ctx.obj if isinstance(ctx.obj, CliState) else CliState()


def _config(ctx: typer.Context, local: Optional[Path], schema: Type[SchemaT], required: bool = True) -> Optional[SchemaT]:
    path = local or _state(ctx).config
    if path is None:
        if required:
            raise ConfigurationError("This command needs --config <path>")
        return None
    return load_config(path, schema)


def _output(ctx: typer.Context, local: Optional[Path], config: Optional[BaseModel] = None) -> Optional[Path]:
    if local is not None:
        return local
    if _state(ctx).out is not None:
        return _state(ctx).out
    configured = getattr(config, "output", None)
    return Path(configured) if configured else None


def _run(command: str, body: Callable[[], None]) -> None:
    """Run a command body, mapping library errors to exit codes."""
    started = time.perf_counter()
    status = "ok"
    logger.info("Command started", command=command)
    try:
        try:
            body()
        except PydanticValidationError as e:
            errors = config_errors(e)
            summary = "; ".join(f"{err['location']} {err['message']}" for err in errors)
            raise ConfigurationError(f"Invalid options: {summary}", errors=errors) from e
    except ThermoTopoError as e:
        status = "error"
        logger.error("Command failed", command=command, code=e.code, details=e.details)
        console.print(f"[bold red]{e.code}[/bold red] {e.message}")
        for err in e.details.get("errors", []):
            console.print(f"  line {err.get('line') or '?'}: {err.get('location', '')} {err.get('message', '')}")
        raise typer.Exit(code=e.exit_code)
    finally:
        elapsed = time.perf_counter() - started
        COMMAND_DURATION.labels(command=command, status=status).observe(elapsed)
        if settings.METRICS_TEXTFILE:
            write_metrics(settings.METRICS_TEXTFILE)
        logger.info("Command finished", command=command, status=status, elapsed_s=round(elapsed, 3))


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"thermotopo {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Configuration file"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", min=1, help="Worker processes"),
    grid: Optional[str] = typer.Option(None, "--grid", help="Twist grid <nx>x<ny>"),
    seed: Optional[int] = typer.Option(None, "--seed", min=0, help="Seed for randomized checks"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Write elapsed_s=0 for byte-identical outputs"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
    version: bool = typer.Option(False, "--version", callback=_version_callback, is_eager=True),
) -> None:
    """Thermotopo command-line interface."""
    if no_timing:
        settings.REPORT_ELAPSED = False
    setup_logging(verbose=verbose)

    parsed_grid = None
    if grid is not None:
        try:
            parsed_grid = TwistGrid.parse(grid)
        except ThermoTopoError as e:
            console.print(f"[bold red]{e.code}[/bold red] {e.message}")
            raise typer.Exit(code=e.exit_code)

    ctx.obj = CliState(config=config, out=out, workers=workers, grid=parsed_grid, seed=seed)


# =============================================================================
# Toy model
# =============================================================================


@toy_app.command("classify")
def toy_classify(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
    delta: float = typer.Option(1.0, help="Band gap"),
    j: float = typer.Option(0.0, help="Band width parameter"),
    n_particles: int = typer.Option(4, "--n", help="Particle number"),
    beta: float = typer.Option(1.0, help="Inverse temperature (0 or inf allowed)"),
) -> None:
    """Classify the finite-temperature phase of the toy model."""

    def body() -> None:
        cfg = _config(ctx, config, ToyConfig, required=False)
        if cfg is not None:
            model = ToyBandModel(cfg.delta, cfg.j, cfg.n_particles, cfg.beta)
        else:
            model = ToyBandModel(delta, j, n_particles, beta)
        result = classify_toy_phase(model)
        payload = result.to_dict()
        mus = range(1, model.n_particles + 1)
        payload["gaps"] = [toy_gap(model, mu) for mu in mus]
        payload["sampled_gaps"] = [sampled_gap(model, mu) for mu in mus]
        write_json(payload, _output(ctx, out, cfg))

    _run(CommandName.TOY_CLASSIFY.value, body)


@toy_app.command("phase-diagram")
def toy_phase_diagram(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Block count and Chern list over a (J/Delta, T) grid."""

    def body() -> None:
        started = time.perf_counter()
        cfg = _config(ctx, config, ToyConfig, required=False) or ToyConfig(
            command=CommandName.TOY_PHASE_DIAGRAM.value,
            j_over_delta={"name": "j_over_delta", "start": 0.0, "stop": 0.6, "step": 0.05},
        )
        if cfg.j_over_delta is None:
            raise ConfigurationError("'toy phase-diagram' needs a 'j_over_delta' axis")
        frame = phase_diagram(cfg.delta, cfg.n_particles, cfg.j_over_delta.values(), cfg.temperatures)
        SWEEP_POINTS_TOTAL.labels(command=CommandName.TOY_PHASE_DIAGRAM.value).inc(len(frame))
        write_csv(frame, _output(ctx, out, cfg), started)

    _run(CommandName.TOY_PHASE_DIAGRAM.value, body)


# =============================================================================
# Hofstadter-Hubbard
# =============================================================================


def _grid(ctx: typer.Context, cfg: HofstadterHubbardConfig) -> Optional[TwistGrid]:
    if _state(ctx).grid is not None:
        return _state(ctx).grid
    return TwistGrid(*cfg.grid) if cfg.grid is not None else None


def _workers(ctx: typer.Context, cfg: HofstadterHubbardConfig) -> Optional[int]:
    return _state(ctx).workers or cfg.workers


@hh_app.command("spectrum")
def hh_spectrum(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Lowest K levels along a parameter sweep, with the structure-change point."""

    def body() -> None:
        started = time.perf_counter()
        cfg = _config(ctx, config, HofstadterHubbardConfig)
        if cfg.sweep is None:
            raise ConfigurationError("'hh spectrum' needs a 'sweep' block")
        scan = scan_spectrum(
            get_lattice_spec(cfg.model),
            cfg.sweep.name,
            cfg.sweep.values(),
            levels=cfg.levels,
            gap_threshold=cfg.gap_threshold,
            beta=cfg.beta,
            n_signature=cfg.signature_manifolds,
            workers=_workers(ctx, cfg),
        )
        target = _output(ctx, out, cfg)
        write_csv(scan.to_frame(), target, started)
        summary = scan.to_dict()
        if target is not None:
            write_json(summary, target.with_suffix(".json"))
        console.print(
            f"reference signature {summary['reference_signature']}, "
            f"structure changes at {cfg.sweep.name} = {scan.transition}"
        )

    _run(CommandName.HH_SPECTRUM.value, body)


@hh_app.command("manifolds")
def hh_manifolds(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Manifold report of the thermal state at one parameter point."""

    def body() -> None:
        cfg = _config(ctx, config, HofstadterHubbardConfig)
        spec = get_lattice_spec(cfg.model)
        basis = FockBasis.for_spec(spec)
        es = eigendecompose(build_many_body_hamiltonian(spec, basis), kind="manifolds")
        structure = thermal_spectral_structure(es, cfg.beta, cfg.gap_threshold, max_levels=cfg.levels)
        report = manifold_report(structure, thermal_ensemble(es, cfg.beta))
        report["model"] = spec.to_dict()
        report["hilbert_dim"] = basis.size
        write_json(report, _output(ctx, out, cfg))

        table = Table(title=f"Manifolds (g = {spec.g})")
        table.add_column("mu", justify="right")
        table.add_column("start", justify="right")
        table.add_column("size", justify="right")
        table.add_column("gap above", justify="right")
        for mu, entry in enumerate(report["manifolds"][: cfg.signature_manifolds + 2], start=1):
            gap = report["gaps"][mu - 1] if mu - 1 < len(report["gaps"]) else None
            table.add_row(str(mu), str(entry["start"]), str(entry["size"]), f"{gap:.4f}" if gap is not None else "-")
        console.print(table)

    _run(CommandName.HH_MANIFOLDS.value, body)


def _chern(ctx: typer.Context, cfg: HofstadterHubbardConfig, verify: bool) -> Any:
    return compute_chern(
        get_lattice_spec(cfg.model),
        cfg.manifold,
        grid=_grid(ctx, cfg),
        gap_threshold=cfg.gap_threshold,
        verify=verify,
        verify_grid=TwistGrid(*cfg.verify_grid) if cfg.verify_grid is not None else None,
        gauge_checks=cfg.gauge_checks,
        seed=_state(ctx).seed,
        workers=_workers(ctx, cfg),
    )


@hh_app.command("chern")
def hh_chern(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Many-body Chern number of one manifold via Wilson-loop winding."""

    def body() -> None:
        cfg = _config(ctx, config, HofstadterHubbardConfig)
        result = _chern(ctx, cfg, verify=cfg.verify)
        write_json(result.to_dict(), _output(ctx, out, cfg))
        console.print(
            f"manifold {cfg.manifold} (dimension {result.data.dimension}): "
            f"C = [bold]{result.winding}[/bold]"
        )

    _run(CommandName.HH_CHERN.value, body)


@hh_app.command("wilson")
def hh_wilson(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
) -> None:
    """arg det W(theta_y) track of one manifold."""

    def body() -> None:
        started = time.perf_counter()
        cfg = _config(ctx, config, HofstadterHubbardConfig)
        result = _chern(ctx, cfg, verify=False)
        write_csv(result.data.to_frame(), _output(ctx, out, cfg), started)

    _run(CommandName.HH_WILSON.value, body)


# =============================================================================
# Bands
# =============================================================================


@bands_app.command("chern")
def bands_chern(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
    kind: str = typer.Option("haldane", help="haldane or hofstadter"),
    n_k: int = typer.Option(64, "--nk", min=4, help="k-grid points per direction"),
) -> None:
    """Plaquette Chern numbers of Bloch band groups."""

    def body() -> None:
        cfg = _config(ctx, config, BandsConfig, required=False) or BandsConfig(kind=kind, n_k=n_k)
        model = get_bloch_model(cfg)
        results = all_band_cherns(model, cfg.bands)
        payload: Dict[str, Any] = {
            "model": model.to_dict(),
            "bands": [r.to_dict() for r in results],
            "total": sum(r.chern for r in results),
        }
        write_json(payload, _output(ctx, out, cfg))

    _run(CommandName.BANDS_CHERN.value, body)


# =============================================================================
# Lindblad
# =============================================================================


@lindblad_app.command("ness")
def lindblad_ness(
    ctx: typer.Context,
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = OutOption,
) -> None:
    """Damping gap and steady state of a local Liouvillian."""

    def body() -> None:
        cfg = _config(ctx, config, LindbladConfig)
        system = build_liouvillian(
            hamiltonian_from_terms(cfg.hamiltonian, cfg.n_qubits),
            jumps_from_terms(cfg.jumps, cfg.n_qubits),
        )
        spectrum = damping_gap_and_ness(system)
        payload = spectrum.to_dict()
        payload["trace_residual"] = trace_residual(system)
        if cfg.perturbation_strength is not None:
            payload["perturbation_ratio"] = perturbation_ratio(cfg.perturbation_strength, spectrum)
        write_json(payload, _output(ctx, out, cfg))

    _run(CommandName.LINDBLAD_NESS.value, body)


@lindblad_app.command("demo-bell")
def lindblad_demo_bell(
    ctx: typer.Context,
    out: Optional[Path] = OutOption,
    kappa: float = typer.Option(1.0, help="Dephasing rate (positive)"),
) -> None:
    """Local dephasing of a Bell pair: entangled pure state to product mixture."""

    def body() -> None:
        write_json(bell_measurement_demo(kappa=kappa).to_dict(), _output(ctx, out))

    _run("lindblad demo-bell", body)


@lindblad_app.command("demo-lcp")
def lindblad_demo_lcp(
    ctx: typer.Context,
    out: Optional[Path] = OutOption,
    time_factor: float = typer.Option(40.0, help="Evolution time in units of 1/damping gap"),
) -> None:
    """Mutual conversion of two gapped steady states by finite-time evolution."""

    def body() -> None:
        write_json(lcp_equivalence_demo(time_factor=time_factor).to_dict(), _output(ctx, out))

    _run("lindblad demo-lcp", body)


if __name__ == "__main__":
    app()
