"""Plot-ready data for every gain curve and map, keyed by figure number."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import partial

from pydantic import BaseModel, ConfigDict

from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.common.types import DEFAULT_SCAN_NODES, Parameter
from relational_qubit_comm.inference.quadrature import QuadratureConfig
from relational_qubit_comm.inference.scheme import EncodingScheme
from relational_qubit_comm.scans.sweep import Scan2DResult, ScanGrid, ScanResult, scan1d, scan2d
from relational_qubit_comm.scans.table import (
    PRIOR_FAMILIES,
    PriorFamily,
    default_template,
    prior_for,
)


class FigureData(BaseModel):
    """Curves (one per prior) or maps (one per encoding) for a single figure."""

    model_config = ConfigDict(frozen=True)

    figure_id: int
    title: str
    curves: dict[PriorFamily, ScanResult] = {}
    maps: dict[Parameter, Scan2DResult] = {}


@dataclass(frozen=True)
class FigureSpec:
    """How a figure is produced; ``build`` gets this definition, quadrature and resolution."""

    figure_id: int
    title: str
    build: Callable[[FigureSpec, QuadratureConfig, int], FigureData]

    @property
    def invocation(self) -> str:
        return f"rqc figure {self.figure_id}"


def _curves(
    spec: FigureSpec,
    quad: QuadratureConfig,
    resolution: int,
    *,
    template: EncodingScheme,
    axis: Parameter,
) -> FigureData:
    grid = ScanGrid.full(axis, resolution)
    curves = {
        family: scan1d(template, grid, prior_for(template.message_param, family), quad)
        for family in PRIOR_FAMILIES
    }
    return FigureData(figure_id=spec.figure_id, title=spec.title, curves=curves)


def _maps(
    spec: FigureSpec, quad: QuadratureConfig, resolution: int, *, family: PriorFamily
) -> FigureData:
    maps: dict[Parameter, Scan2DResult] = {}
    for encoding in (Parameter.THETA, Parameter.PSI, Parameter.ALPHA):
        axis_a, axis_b = encoding.others()
        maps[encoding] = scan2d(
            default_template(encoding),
            ScanGrid.full(axis_a, resolution),
            ScanGrid.full(axis_b, resolution),
            prior_for(encoding, family),
            quad,
        )
    return FigureData(figure_id=spec.figure_id, title=spec.title, maps=maps)


FIGURES: dict[int, FigureSpec] = {
    spec.figure_id: spec
    for spec in (
        FigureSpec(
            3,
            "theta encoding: gain vs alpha0 at psi0 = 0",
            partial(
                _curves,
                template=EncodingScheme.of(Parameter.THETA, alpha=0.0, psi=0.0),
                axis=Parameter.ALPHA,
            ),
        ),
        FigureSpec(
            4,
            "psi encoding: gain vs alpha0 at theta0 = pi",
            partial(
                _curves,
                template=EncodingScheme.of(Parameter.PSI, alpha=0.0, theta=math.pi),
                axis=Parameter.ALPHA,
            ),
        ),
        FigureSpec(
            5,
            "alpha encoding: gain vs theta0 at psi0 = 0",
            partial(
                _curves,
                template=EncodingScheme.of(Parameter.ALPHA, theta=0.0, psi=0.0),
                axis=Parameter.THETA,
            ),
        ),
        FigureSpec(
            6,
            "gain over both fixed parameters, uniform prior",
            partial(_maps, family="uniform"),
        ),
        FigureSpec(
            7,
            "gain over both fixed parameters, discrete prior",
            partial(_maps, family="discrete"),
        ),
    )
}

TABLE_INVOCATION = "rqc table1"


def figure(
    figure_id: int,
    quad: QuadratureConfig | None = None,
    resolution: int = DEFAULT_SCAN_NODES,
) -> FigureData:
    """Compute the data behind figure ``figure_id`` (3 to 7)."""
    spec = FIGURES.get(figure_id)
    if spec is None:
        raise InvalidInputError(
            f"unknown figure {figure_id}", details={"available": sorted(FIGURES)}
        )
    return spec.build(spec, quad or QuadratureConfig(), resolution)


def invocations() -> list[tuple[str, str]]:
    """(command, description) for every reproducible figure and the table."""
    rows = [(spec.invocation, spec.title) for spec in FIGURES.values()]
    rows.append((TABLE_INVOCATION, "best average gain per encoding and prior"))
    return rows
