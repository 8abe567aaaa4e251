"""Command-line interface for relational qubit communication."""

from __future__ import annotations

import math
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated

import structlog
import typer
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from relational_qubit_comm.common.exceptions import (
    InvalidConfigurationError,
    InvalidInputError,
    NumericalDomainError,
    RelFrameError,
)
from relational_qubit_comm.common.logsetup import configure_logging
from relational_qubit_comm.common.types import (
    DEFAULT_QUAD_POINTS,
    DEFAULT_SCAN_NODES,
    Parameter,
    RelativeParams,
)
from relational_qubit_comm.export import (
    OutputFormat,
    Records,
    density_records,
    extraction_records,
    figure_records,
    infogain_records,
    scan2d_records,
    scan_records,
    state_records,
    table_records,
)
from relational_qubit_comm.inference import (
    EncodingScheme,
    QuadratureConfig,
    TwoPoint,
    Uniform,
    discrete_prior,
    info_gain,
    make_two_point,
    uniform_prior,
)
from relational_qubit_comm.relative import (
    concurrence,
    extract,
    prepare_canonical,
    prepare_via_circuit,
)
from relational_qubit_comm.scans import (
    ScanGrid,
    figure as build_figure,
    invocations,
    scan1d,
    scan2d,
    table_one,
)
from relational_qubit_comm.su2 import RandomStream, StateVector2Q
from relational_qubit_comm.twirl import p_outcomes_state, twirl_analytic, twirl_deviation

logger = structlog.get_logger()

app = typer.Typer(
    name="rqc",
    help="Frame-independent communication with relative parameters of two-qubit states",
    rich_markup_mode="rich",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)

EXIT_NUMERICAL = 1
EXIT_USAGE = 2

# Typed decimals such as 3.1415926536 overshoot pi slightly.
INPUT_SNAP_TOL = 1e-9


class RunConfig(BaseModel):
    """A fully parsed request, validated before any computation."""

    model_config = ConfigDict(frozen=True)

    command: str
    prior_spec: str | None = None
    quad_points: int = DEFAULT_QUAD_POINTS
    output_format: OutputFormat = OutputFormat.CSV
    output: Path | None = None
    seed: int | None = Field(default=None, ge=0, le=2**64 - 1)
    degrees: bool = False

    def angle(
        self, value: float, param: Parameter | None = None, lo: float | None = None
    ) -> float:
        """Convert to radians and snap onto the range of ``param`` when just outside it."""
        x = math.radians(value) if self.degrees else value
        if param is None:
            return x
        low = param.lo if lo is None else lo
        if low - INPUT_SNAP_TOL <= x < low:
            return low
        if param.hi < x <= param.hi + INPUT_SNAP_TOL:
            return param.hi
        return x

    def quad(self) -> QuadratureConfig:
        return QuadratureConfig.with_points(self.quad_points)


# Shared options
FormatOpt = Annotated[
    OutputFormat, typer.Option("--format", "-f", help="Output format: csv, json or table")
]
OutputOpt = Annotated[
    Path | None, typer.Option("--output", "-o", help="Write to this file instead of stdout")
]
DegreesOpt = Annotated[bool, typer.Option("--degrees", help="Angles are given in degrees")]
QuadOpt = Annotated[
    int, typer.Option("--quad-points", help="Odd number of Simpson nodes", min=3)
]
SeedOpt = Annotated[
    int | None,
    typer.Option("--seed", envvar="RQC_SEED", help="Random seed (default from RQC_SEED)"),
]
AlphaOpt = Annotated[float, typer.Option("--alpha", help="Entanglement angle in [0, pi/4]")]
ThetaOpt = Annotated[float, typer.Option("--theta", help="Inter-qubit angle in [0, pi]")]
PsiOpt = Annotated[float, typer.Option("--psi", help="Relative phase in [-pi, pi]")]
EncodeOpt = Annotated[
    Parameter, typer.Option("--encode", "-e", help="Parameter carrying the message")
]
PriorOpt = Annotated[
    str, typer.Option("--prior", help="uniform, discrete or discrete:x0,x1[,w0]")
]
FixedOpt = Annotated[
    str, typer.Option("--fixed", help="Fixed parameters, e.g. alpha=0.785,psi=0")
]


def _config(command: str, **fields: object) -> RunConfig:
    try:
        return RunConfig(command=command, **fields)  # type: ignore[arg-type]
    except ValidationError as e:
        raise InvalidConfigurationError(
            f"invalid options for {command}", details={"errors": e.errors()}, cause=e
        ) from e


@contextmanager
def _diagnostics() -> Iterator[None]:
    """Map library errors to exit codes with a message on stderr."""
    try:
        yield
    except RelFrameError as e:
        logger.debug("command_failed", **e.to_dict()["error"])
        if isinstance(e, (InvalidInputError, InvalidConfigurationError)):
            err_console.print(f"[red]error[/red] {escape(str(e))}")
            raise typer.Exit(EXIT_USAGE) from e
        label = "numerical error" if isinstance(e, NumericalDomainError) else "error"
        err_console.print(f"[red]{label}[/red] {escape(str(e))}")
        raise typer.Exit(EXIT_NUMERICAL) from e


def _emit(records: Records, config: RunConfig) -> None:
    if config.output_format is OutputFormat.TABLE:
        if config.output is not None:
            with config.output.open("w") as f:
                Console(file=f, width=120).print(records.to_table())
        else:
            console.print(records.to_table())
        return
    text = records.render(config.output_format)
    if config.output is not None:
        config.output.write_text(text)
        logger.info("output_written", path=str(config.output), rows=len(records.rows))
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def parse_bindings(text: str, config: RunConfig) -> dict[str, float]:
    """``alpha=0.7,psi=0`` -> {"alpha": 0.7, "psi": 0.0} in radians."""
    bindings: dict[str, float] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, raw = item.partition("=")
        if not sep:
            raise InvalidInputError(f"expected name=value, got {item!r}")
        try:
            param = Parameter(name.strip())
            value = float(raw)
        except ValueError as e:
            raise InvalidInputError(
                f"cannot parse binding {item!r}",
                details={"allowed": [p.value for p in Parameter]},
                cause=e,
            ) from e
        bindings[param.value] = config.angle(value, param)
    return bindings


def parse_prior(text: str, param: Parameter, config: RunConfig) -> Uniform | TwoPoint:
    """``uniform``, ``discrete`` or ``discrete:x0,x1[,w0]`` for the message parameter."""
    kind, _, rest = text.strip().partition(":")
    if kind == "uniform" and not rest:
        return uniform_prior(param)
    if kind == "discrete" and not rest:
        return discrete_prior(param)
    if kind == "discrete":
        try:
            values = [float(v) for v in rest.split(",")]
        except ValueError as e:
            raise InvalidInputError(f"cannot parse prior {text!r}", cause=e) from e
        if len(values) not in (2, 3):
            raise InvalidInputError(
                "discrete prior takes x0,x1 and an optional weight", details={"prior": text}
            )
        weight = values[2] if len(values) == 3 else 0.5
        x0, x1 = config.angle(values[0], param), config.angle(values[1], param)
        return make_two_point(x0, x1, weight)
    raise InvalidInputError(
        f"unknown prior {text!r}",
        details={"allowed": ["uniform", "discrete", "discrete:x0,x1[,w0]"]},
    )


def _params(config: RunConfig, alpha: float, theta: float, psi: float) -> RelativeParams:
    return RelativeParams.of(
        config.angle(alpha, Parameter.ALPHA),
        config.angle(theta, Parameter.THETA),
        config.angle(psi, Parameter.PSI, lo=-math.pi),
    )


def _scheme(encode: Parameter, fixed: str, config: RunConfig) -> EncodingScheme:
    return EncodingScheme.of(encode, **parse_bindings(fixed, config))


@app.callback()
def main_callback(
    verbose: Annotated[
        int, typer.Option("--verbose", "-v", count=True, help="-v for info, -vv for debug logs")
    ] = 0,
    json_logs: Annotated[bool, typer.Option("--json-logs", help="Log lines as JSON")] = False,
) -> None:
    """Prepare, twirl and decode relative-parameter states; reproduce gain curves and tables."""
    configure_logging(verbose=verbose, json_logs=json_logs)


@app.command()
def version() -> None:
    """Show version information."""
    from relational_qubit_comm import __version__

    console.print(f"relational-qubit-comm [bold blue]v{__version__}[/bold blue]")


@app.command()
def prepare(
    alpha: AlphaOpt,
    theta: ThetaOpt,
    psi: PsiOpt,
    circuit: Annotated[
        bool, typer.Option("--circuit", help="Build the state with the gate circuit")
    ] = False,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """Amplitudes of the canonical state for (alpha, theta, psi)."""
    with _diagnostics():
        config = _config("prepare", output_format=fmt, output=output, degrees=degrees)
        p = _params(config, alpha, theta, psi)
        state = prepare_via_circuit(p) if circuit else prepare_canonical(p)
        _emit(state_records(state), config)


@app.command("extract")
def extract_command(
    amps: Annotated[
        str,
        typer.Option(
            "--amps",
            help="Eight reals a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im (use --amps=...)",
        ),
    ],
    normalize: Annotated[
        bool, typer.Option("--normalize", help="Normalize the amplitudes first")
    ] = False,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
) -> None:
    """Relative parameters of an arbitrary pure state."""
    with _diagnostics():
        config = _config("extract", output_format=fmt, output=output)
        try:
            reals = [float(v) for v in amps.split(",")]
        except ValueError as e:
            raise InvalidInputError(f"cannot parse amplitudes {amps!r}", cause=e) from e
        if len(reals) != 8:
            raise InvalidInputError(
                "expected eight reals", details={"received": len(reals)}
            )
        values = [complex(reals[k], reals[k + 1]) for k in range(0, 8, 2)]
        state = StateVector2Q.normalized(values) if normalize else StateVector2Q(values)
        _emit(extraction_records(extract(state), concurrence(state)), config)


@app.command()
def twirl(
    alpha: AlphaOpt,
    theta: ThetaOpt,
    psi: PsiOpt,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """Analytic twirl of the canonical state's density matrix."""
    with _diagnostics():
        config = _config("twirl", output_format=fmt, output=output, degrees=degrees)
        state = prepare_canonical(_params(config, alpha, theta, psi))
        records = density_records(twirl_analytic(state.outer()), title="twirled state")
        records.metadata["p_singlet"] = p_outcomes_state(state).p_singlet
        _emit(records, config)


@app.command("check-twirl")
def check_twirl(
    alpha: AlphaOpt,
    theta: ThetaOpt,
    psi: PsiOpt,
    samples: Annotated[int, typer.Option("--samples", "-n", min=1)] = 100_000,
    seed: SeedOpt = None,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """Max-entry deviation of the Monte Carlo twirl from the analytic one."""
    with _diagnostics():
        config = _config(
            "check-twirl", output_format=fmt, output=output, degrees=degrees, seed=seed
        )
        state = prepare_canonical(_params(config, alpha, theta, psi))
        stream = RandomStream(config.seed if config.seed is not None else 0)
        deviation = twirl_deviation(state.outer(), samples, stream)
        records = Records(["samples", "seed", "max_deviation"], title="twirl check")
        records.add(samples, stream.seed, deviation)
        _emit(records, config)


@app.command("infogain")
def infogain_command(
    encode: EncodeOpt,
    fixed: FixedOpt,
    prior: PriorOpt = "uniform",
    quad_points: QuadOpt = DEFAULT_QUAD_POINTS,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """Average information gain of one encoding scheme."""
    with _diagnostics():
        config = _config(
            "infogain",
            prior_spec=prior,
            quad_points=quad_points,
            output_format=fmt,
            output=output,
            degrees=degrees,
        )
        scheme = _scheme(encode, fixed, config)
        result = info_gain(scheme, parse_prior(prior, encode, config), config.quad())
        _emit(infogain_records(result), config)


@app.command()
def scan(
    encode: EncodeOpt,
    vary: Annotated[Parameter, typer.Option("--vary", help="Fixed parameter to sweep")],
    fixed: FixedOpt,
    prior: PriorOpt = "uniform",
    nodes: Annotated[int, typer.Option("--nodes", min=2)] = DEFAULT_SCAN_NODES,
    quad_points: QuadOpt = DEFAULT_QUAD_POINTS,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """Gain along one fixed parameter; ``--fixed`` binds the other one."""
    with _diagnostics():
        config = _config(
            "scan",
            prior_spec=prior,
            quad_points=quad_points,
            output_format=fmt,
            output=output,
            degrees=degrees,
        )
        if vary is encode:
            raise InvalidConfigurationError(
                "cannot scan the message parameter itself", details={"vary": vary.value}
            )
        bindings = {vary.value: vary.lo, **parse_bindings(fixed, config)}
        template = EncodingScheme.of(encode, **bindings)
        grid = ScanGrid.full(vary, nodes)
        result = scan1d(template, grid, parse_prior(prior, encode, config), config.quad())
        _emit(scan_records(result), config)


@app.command("scan2d")
def scan2d_command(
    encode: EncodeOpt,
    prior: PriorOpt = "uniform",
    nodes: Annotated[int, typer.Option("--nodes", min=2)] = DEFAULT_SCAN_NODES,
    quad_points: QuadOpt = DEFAULT_QUAD_POINTS,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
    degrees: DegreesOpt = False,
) -> None:
    """Gain map over both fixed parameters."""
    with _diagnostics():
        config = _config(
            "scan2d",
            prior_spec=prior,
            quad_points=quad_points,
            output_format=fmt,
            output=output,
            degrees=degrees,
        )
        axis_a, axis_b = encode.others()
        template = EncodingScheme.of(encode, **{axis_a.value: 0.0, axis_b.value: 0.0})
        result = scan2d(
            template,
            ScanGrid.full(axis_a, nodes),
            ScanGrid.full(axis_b, nodes),
            parse_prior(prior, encode, config),
            config.quad(),
        )
        _emit(scan2d_records(result), config)


@app.command()
def table1(
    quad_points: QuadOpt = DEFAULT_QUAD_POINTS,
    resolution: Annotated[int, typer.Option("--resolution", min=2)] = DEFAULT_SCAN_NODES,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
) -> None:
    """Best average gain for each encoding under uniform and discrete priors."""
    with _diagnostics():
        config = _config("table1", quad_points=quad_points, output_format=fmt, output=output)
        report = table_one(config.quad(), resolution)
        _emit(table_records(report), config)


@app.command("figure")
def figure_command(
    figure_id: Annotated[int, typer.Argument(help="Figure number, 3 to 7")],
    quad_points: QuadOpt = DEFAULT_QUAD_POINTS,
    resolution: Annotated[int, typer.Option("--resolution", min=2)] = DEFAULT_SCAN_NODES,
    fmt: FormatOpt = OutputFormat.CSV,
    output: OutputOpt = None,
) -> None:
    """Plot-ready data for one figure."""
    with _diagnostics():
        config = _config("figure", quad_points=quad_points, output_format=fmt, output=output)
        data = build_figure(figure_id, config.quad(), resolution)
        _emit(figure_records(data), config)


@app.command()
def figures() -> None:
    """List the invocation that reproduces each figure and the table."""
    table = Table(title="Reproducible outputs")
    table.add_column("Command", style="cyan")
    table.add_column("Description", style="green")
    for command, description in invocations():
        table.add_row(command, description)
    console.print(table)


def main() -> None:
    """Entry point for CLI."""
    app()


if __name__ == "__main__":
    main()
