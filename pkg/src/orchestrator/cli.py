"""Command-line interface for the holonomy toolkit."""

import json
import sys
from pathlib import Path
from typing import Annotated, Any, Callable, Optional

import typer

from src.common.config import ConfigLoader, RunConfig
from src.common.exceptions import CwHolonomyError
from src.common.logging import bind_run_context, get_logger, setup_logging

from .interfaces import CommandResult
from .pipeline_manager import PipelineManager, write_json

logger = get_logger(__name__)

EXIT_UNDETERMINED = 3

app = typer.Typer(
    name="cw-holonomy",
    help="Holonomy, spectral curves and Darboux transforms of constrained Willmore tori.",
    no_args_is_help=True,
    add_completion=False,
)

ConfigOpt = Annotated[Optional[Path], typer.Option("--config", help="YAML or key=value configuration file")]
SurfaceOpt = Annotated[
    Optional[str], typer.Option("--surface", help="Builtin name, file:PATH or fixture:zero|jordan")
]
ParamOpt = Annotated[Optional[list[str]], typer.Option("--param", help="Generator parameter NAME=VALUE")]
DimsOpt = Annotated[Optional[str], typer.Option("--dims", help="Grid dims N1xN2")]
EtaOpt = Annotated[
    Optional[str],
    typer.Option("--eta", help="zero | cmc:RHO | harmonic:left|right | file:PATH; hsl needs harmonic:left|right"),
]
AmbientOpt = Annotated[Optional[str], typer.Option("--ambient", help="Ambient space of cmc policies")]
AnnulusOpt = Annotated[Optional[str], typer.Option("--annulus", help="RMIN,RMAX")]
CirclesOpt = Annotated[Optional[int], typer.Option("--circles", help="Circles in the annulus")]
SamplesOpt = Annotated[Optional[int], typer.Option("--samples", help="Samples per circle of the sweep (sweep.samples)")]
ClassifySamplesOpt = Annotated[
    Optional[int], typer.Option("--samples", help="Samples on the classification circle (sweep.classify_samples)")
]
RadiusOpt = Annotated[Optional[float], typer.Option("--radius", help="Radius of the sampled circle")]
MuOpt = Annotated[Optional[str], typer.Option("--mu", help="Spectral parameter, e.g. 0.5+0.2i")]
IndexOpt = Annotated[Optional[int], typer.Option("--eigen-index", help="Holonomy eigenline index")]
TolEigOpt = Annotated[Optional[float], typer.Option("--tol-eig", help="Eigenvalue clustering tolerance")]
TolOdeOpt = Annotated[Optional[float], typer.Option("--tol-ode", help="Transport error bound")]
WorkersOpt = Annotated[Optional[int], typer.Option("--workers", help="Worker threads")]
OutOpt = Annotated[Optional[Path], typer.Option("--out", help="Output directory; stdout if unset")]
LogLevelOpt = Annotated[Optional[str], typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR")]
LogFormatOpt = Annotated[Optional[str], typer.Option("--log-format", help="json or console")]


def flags_to_overrides(**flags: Any) -> dict[str, str]:
    """Flat overrides from CLI flags; unset flags are skipped."""
    overrides: dict[str, str] = {}
    for param in flags.pop("param", None) or []:
        name, sep, value = param.partition("=")
        if not sep:
            raise typer.BadParameter(f"expected NAME=VALUE, got {param!r}", param_hint="--param")
        overrides[f"param.{name.strip()}"] = value
    for key, value in flags.items():
        if value is not None:
            overrides[key.replace("_", "-")] = str(value)
    return overrides


def load_config(config: Optional[Path], overrides: dict[str, str]) -> RunConfig:
    return ConfigLoader.merge(ConfigLoader.load_or_default(config), overrides)


def emit_json(config: RunConfig, name: str, payload: dict[str, Any]) -> list[Path]:
    """Write payload to OUT/name, or to stdout when no output directory is set."""
    if config.output.out_dir is None:
        typer.echo(json.dumps(payload, indent=2, sort_keys=True))
        return []
    return [write_json(Path(config.output.out_dir) / name, payload)]


def run_command(
    command: str,
    config_path: Optional[Path],
    overrides: dict[str, str],
    action: Callable[[PipelineManager], CommandResult],
) -> None:
    """Load the configuration, run one command and exit with its code.

    Library errors carry their own exit code; an unreadable input maps to 1,
    validation failures to 2, an undetermined case to 3, a missing spectral
    curve to 4 and a degenerate transform to 5.
    """
    try:
        config = load_config(config_path, overrides)
        setup_logging(config.logging.level, config.logging.format, config.logging.output)
        bind_run_context(command=command, surface=config.surface.source)
        result = action(PipelineManager(config))
    except CwHolonomyError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(code=exc.exit_code) from exc
    for path in result.files:
        logger.info("file_written", command=command, path=str(path))
    raise typer.Exit(code=result.exit_code)


@app.command()
def analyze(
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    eta: EtaOpt = None,
    ambient: AmbientOpt = None,
    out: OutOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Frame summary, Willmore energy, normal bundle degree and residuals."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, eta=eta, ambient=ambient, out=out,
        log_level=log_level, log_format=log_format,
    )

    def action(pm: PipelineManager) -> CommandResult:
        payload = pm.analyze().model_dump(mode="json")
        return CommandResult("analyze", payload, emit_json(pm.config, "analysis.json", payload))

    run_command("analyze", config, overrides, action)


@app.command()
def classify(
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    eta: EtaOpt = None,
    ambient: AmbientOpt = None,
    radius: RadiusOpt = None,
    samples: ClassifySamplesOpt = None,
    tol_eig: TolEigOpt = None,
    tol_ode: TolOdeOpt = None,
    workers: WorkersOpt = None,
    out: OutOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Case label of the holonomy representation with per-mu evidence."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, eta=eta, ambient=ambient, radius=radius,
        classify_samples=samples, tol_eig=tol_eig, tol_ode=tol_ode, workers=workers, out=out,
        log_level=log_level, log_format=log_format,
    )

    def action(pm: PipelineManager) -> CommandResult:
        label = pm.classify()
        payload = label.model_dump(mode="json")
        files = emit_json(pm.config, "classification.json", payload)
        code = EXIT_UNDETERMINED if pm.is_undetermined(label) else 0
        return CommandResult("classify", payload, files, code)

    run_command("classify", config, overrides, action)


@app.command()
def holonomy(
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    eta: EtaOpt = None,
    ambient: AmbientOpt = None,
    radius: RadiusOpt = None,
    samples: SamplesOpt = None,
    tol_eig: TolEigOpt = None,
    tol_ode: TolOdeOpt = None,
    workers: WorkersOpt = None,
    out: OutOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Holonomy eigenvalues, determinant drift and commutators on one circle."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, eta=eta, ambient=ambient, radius=radius,
        samples=samples, tol_eig=tol_eig, tol_ode=tol_ode, workers=workers, out=out,
        log_level=log_level, log_format=log_format,
    )

    def action(pm: PipelineManager) -> CommandResult:
        payload = pm.holonomy_sweep().model_dump(mode="json")
        return CommandResult("holonomy", payload, emit_json(pm.config, "holonomy.json", payload))

    run_command("holonomy", config, overrides, action)


@app.command()
def spectral(
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    eta: EtaOpt = None,
    ambient: AmbientOpt = None,
    annulus: AnnulusOpt = None,
    circles: CirclesOpt = None,
    samples: SamplesOpt = None,
    tol_eig: TolEigOpt = None,
    tol_ode: TolOdeOpt = None,
    workers: WorkersOpt = None,
    out: OutOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Eigenvalue branches (CSV), branch points and genus (JSON)."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, eta=eta, ambient=ambient, annulus=annulus,
        circles=circles, samples=samples, tol_eig=tol_eig, tol_ode=tol_ode, workers=workers,
        out=out, log_level=log_level, log_format=log_format,
    )

    def action(pm: PipelineManager) -> CommandResult:
        label = pm.classify()
        if pm.is_undetermined(label):
            payload = label.model_dump(mode="json")
            files = emit_json(pm.config, "classification.json", payload)
            return CommandResult("spectral", payload, files, EXIT_UNDETERMINED)
        report = pm.spectral(label)
        payload = report.to_summary().model_dump(mode="json")
        if pm.config.output.out_dir is None:
            return CommandResult("spectral", payload, emit_json(pm.config, "spectral_summary.json", payload))
        return CommandResult("spectral", payload, list(report.write(pm.config.output.out_dir)))

    run_command("spectral", config, overrides, action)


@app.command()
def darboux(
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    eta: EtaOpt = None,
    ambient: AmbientOpt = None,
    mu: MuOpt = None,
    eigen_index: IndexOpt = None,
    tol_eig: TolEigOpt = None,
    tol_ode: TolOdeOpt = None,
    out: OutOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Darboux transform from a holonomy eigenline: quality JSON and mesh."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, eta=eta, ambient=ambient, mu=mu,
        eigen_index=eigen_index, tol_eig=tol_eig, tol_ode=tol_ode, out=out,
        log_level=log_level, log_format=log_format,
    )

    def action(pm: PipelineManager) -> CommandResult:
        dm, quality = pm.darboux()
        payload = quality.model_dump(mode="json")
        files = emit_json(pm.config, "darboux_quality.json", payload)
        if pm.config.output.out_dir is not None:
            files.append(pm.export_darboux(dm, Path(pm.config.output.out_dir) / "darboux_mesh.json"))
        return CommandResult("darboux", payload, files)

    run_command("darboux", config, overrides, action)


@app.command()
def harmonic(
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    eta: EtaOpt = None,
    ambient: AmbientOpt = None,
    radius: RadiusOpt = None,
    samples: ClassifySamplesOpt = None,
    tol_eig: TolEigOpt = None,
    tol_ode: TolOdeOpt = None,
    workers: WorkersOpt = None,
    out: OutOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Paired CSV of stripped 4x4 and rank-1 2x2 holonomy eigenvalues."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, eta=eta, ambient=ambient, radius=radius,
        classify_samples=samples, tol_eig=tol_eig, tol_ode=tol_ode, workers=workers, out=out,
        log_level=log_level, log_format=log_format,
    )

    def action(pm: PipelineManager) -> CommandResult:
        frame = pm.harmonic()
        payload = {"schema_version": "1.0", "pairs": len(frame), "max_abs_diff": float(frame["abs_diff"].max())}
        if pm.config.output.out_dir is None:
            typer.echo(frame.to_csv(index=False), nl=False)
            return CommandResult("harmonic", payload)
        out_dir = Path(pm.config.output.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        csv_path = out_dir / "harmonic_pairs.csv"
        frame.to_csv(csv_path, index=False)
        return CommandResult("harmonic", payload, [csv_path, write_json(out_dir / "harmonic_summary.json", payload)])

    run_command("harmonic", config, overrides, action)


@app.command()
def convert(
    output: Annotated[Path, typer.Argument(help="Sampled-surface JSON to write")],
    config: ConfigOpt = None,
    surface: SurfaceOpt = None,
    param: ParamOpt = None,
    dims: DimsOpt = None,
    log_level: LogLevelOpt = None,
    log_format: LogFormatOpt = None,
) -> None:
    """Sample a builtin or file surface and write it as a sampled-surface document."""
    overrides = flags_to_overrides(
        surface=surface, param=param, dims=dims, log_level=log_level, log_format=log_format
    )

    def action(pm: PipelineManager) -> CommandResult:
        return CommandResult("convert", {"path": str(output)}, [pm.convert(output)])

    run_command("convert", config, overrides, action)


def main() -> None:
    """Main entry point for the CLI."""
    app()


if __name__ == "__main__":
    sys.exit(main())
