"""One- and two-dimensional sweeps of the average information gain over fixed parameters."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt
import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from relational_qubit_comm.common.decorators import timed
from relational_qubit_comm.common.exceptions import InvalidConfigurationError, InvalidInputError
from relational_qubit_comm.common.types import DEFAULT_SCAN_NODES, Parameter
from relational_qubit_comm.inference.infogain import info_gain
from relational_qubit_comm.inference.priors import PriorModel, TwoPoint, Uniform
from relational_qubit_comm.inference.quadrature import QuadratureConfig
from relational_qubit_comm.inference.scheme import EncodingScheme

logger = structlog.get_logger()

_GAIN_CEILING = 1.0 + 1e-9


class ScanGrid(BaseModel):
    """n equally spaced values of one parameter on [lo, hi], endpoints included."""

    model_config = ConfigDict(frozen=True)

    param: Parameter
    lo: float = Field(allow_inf_nan=False)
    hi: float = Field(allow_inf_nan=False)
    n: int = Field(default=DEFAULT_SCAN_NODES, ge=2)

    @model_validator(mode="after")
    def _inside_range(self) -> ScanGrid:
        if not self.lo < self.hi:
            raise ValueError("scan grid needs lo < hi")
        self.param.check(self.lo)
        self.param.check(self.hi)
        return self

    @classmethod
    def full(cls, param: Parameter | str, n: int = DEFAULT_SCAN_NODES) -> ScanGrid:
        """The whole encoding range of ``param``."""
        p = Parameter(param)
        return cls.of(p, p.lo, p.hi, n)

    @classmethod
    def of(cls, param: Parameter | str, lo: float, hi: float, n: int) -> ScanGrid:
        try:
            return cls(param=Parameter(param), lo=lo, hi=hi, n=n)
        except InvalidInputError:
            raise
        except (ValueError, ValidationError) as e:
            raise InvalidInputError(
                "invalid scan grid",
                details={"param": str(param), "lo": lo, "hi": hi, "n": n},
                cause=e,
            ) from e

    def values(self) -> npt.NDArray[np.float64]:
        return np.linspace(self.lo, self.hi, self.n)


class ScanResult(BaseModel):
    """Average information gain along one fixed-parameter axis."""

    model_config = ConfigDict(frozen=True)

    axis: Parameter
    axis_values: list[float]
    avg_gain: list[float]
    scheme: EncodingScheme
    prior: PriorModel
    quad: QuadratureConfig

    @model_validator(mode="after")
    def _aligned(self) -> ScanResult:
        if len(self.axis_values) != len(self.avg_gain):
            raise ValueError("axis and gain lists differ in length")
        if any(not 0.0 <= g <= _GAIN_CEILING for g in self.avg_gain):
            raise ValueError("gains must lie in [0, 1] bits")
        return self

    def argmax(self) -> tuple[float, float]:
        """(axis value, gain) of the first maximum."""
        i = int(np.argmax(self.avg_gain))
        return self.axis_values[i], self.avg_gain[i]


class Scan2DResult(BaseModel):
    """Row-major gain map: rows follow ``axis_a``, columns ``axis_b``."""

    model_config = ConfigDict(frozen=True)

    axis_a: Parameter
    axis_b: Parameter
    a_values: list[float]
    b_values: list[float]
    avg_gain: list[list[float]]
    scheme: EncodingScheme
    prior: PriorModel
    quad: QuadratureConfig

    @model_validator(mode="after")
    def _aligned(self) -> Scan2DResult:
        if len(self.avg_gain) != len(self.a_values) or any(
            len(row) != len(self.b_values) for row in self.avg_gain
        ):
            raise ValueError("gain matrix does not match the axes")
        return self

    @property
    def matrix(self) -> npt.NDArray[np.float64]:
        return np.array(self.avg_gain, dtype=np.float64)

    def row(self, i: int) -> list[float]:
        return list(self.avg_gain[i])

    def column(self, j: int) -> list[float]:
        return [row[j] for row in self.avg_gain]


def _check_axis(template: EncodingScheme, grid: ScanGrid) -> None:
    if grid.param is template.message_param:
        raise InvalidConfigurationError(
            "cannot scan the message parameter itself",
            details={"message_param": template.message_param.value, "vary": grid.param.value},
        )


@timed("scan1d")
def scan1d(
    template: EncodingScheme,
    vary: ScanGrid,
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig | None = None,
) -> ScanResult:
    """
    Average information gain at each node of ``vary``; other settings from ``template``.

    Raises:
        InvalidConfigurationError: if ``vary`` targets the message parameter
    """
    quad = quad or QuadratureConfig()
    _check_axis(template, vary)
    xs = vary.values()
    gains = [
        info_gain(template.with_fixed(**{vary.param.value: float(x)}), prior, quad).avg_gain
        for x in xs
    ]
    logger.info(
        "scan1d_finished",
        scheme=template.describe(),
        axis=vary.param.value,
        nodes=vary.n,
        max_gain=max(gains),
    )
    return ScanResult(
        axis=vary.param,
        axis_values=[float(x) for x in xs],
        avg_gain=gains,
        scheme=template,
        prior=prior,
        quad=quad,
    )


@timed("scan2d")
def scan2d(
    template: EncodingScheme,
    grid_a: ScanGrid,
    grid_b: ScanGrid,
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig | None = None,
) -> Scan2DResult:
    """
    Gain map over both fixed parameters.

    Row i, column j is the gain at (grid_a[i], grid_b[j]); any row or column
    equals the matching ``scan1d`` node for node.
    """
    quad = quad or QuadratureConfig()
    _check_axis(template, grid_a)
    _check_axis(template, grid_b)
    if grid_a.param is grid_b.param:
        raise InvalidConfigurationError(
            "the two grids must target different parameters",
            details={"param": grid_a.param.value},
        )
    a_values, b_values = grid_a.values(), grid_b.values()
    matrix = [
        [
            info_gain(
                template.with_fixed(**{grid_a.param.value: float(a), grid_b.param.value: float(b)}),
                prior,
                quad,
            ).avg_gain
            for b in b_values
        ]
        for a in a_values
    ]
    logger.info(
        "scan2d_finished",
        scheme=template.describe(),
        axes=(grid_a.param.value, grid_b.param.value),
        nodes=grid_a.n * grid_b.n,
    )
    return Scan2DResult(
        axis_a=grid_a.param,
        axis_b=grid_b.param,
        a_values=[float(a) for a in a_values],
        b_values=[float(b) for b in b_values],
        avg_gain=matrix,
        scheme=template,
        prior=prior,
        quad=quad,
    )
