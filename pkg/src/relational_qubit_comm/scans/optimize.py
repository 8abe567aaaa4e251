"""Best fixed settings for an encoding scheme."""

from __future__ import annotations

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict
from scipy import optimize

from relational_qubit_comm.common.decorators import timed
from relational_qubit_comm.common.exceptions import InvalidConfigurationError
from relational_qubit_comm.common.types import DEFAULT_REFINE_TOL, DEFAULT_SCAN_NODES, Parameter
from relational_qubit_comm.inference.infogain import info_gain
from relational_qubit_comm.inference.priors import PriorModel, TwoPoint, Uniform
from relational_qubit_comm.inference.quadrature import QuadratureConfig
from relational_qubit_comm.inference.scheme import EncodingScheme
from relational_qubit_comm.scans.sweep import ScanGrid, scan2d

logger = structlog.get_logger()

_TIE_TOL = 1e-12


class OptimalSetting(BaseModel):
    """Fixed values reaching the largest average gain found."""

    model_config = ConfigDict(frozen=True)

    scheme: EncodingScheme
    prior: PriorModel
    avg_gain: float
    grid_gain: float
    refined: bool = False

    @property
    def fixed_values(self) -> dict[Parameter, float]:
        return dict(self.scheme.fixed_values)


def _refine_axis(
    scheme: EncodingScheme,
    axis: Parameter,
    step: float,
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig,
    current: float,
) -> tuple[EncodingScheme, float]:
    """One bounded scalar search on ``axis`` within a grid step of the current node."""
    x0 = scheme.fixed(axis)
    lo, hi = max(axis.lo, x0 - step), min(axis.hi, x0 + step)

    def objective(x: float) -> float:
        candidate = scheme.with_fixed(**{axis.value: float(np.clip(x, axis.lo, axis.hi))})
        return -info_gain(candidate, prior, quad).avg_gain

    found = optimize.minimize_scalar(
        objective, bounds=(lo, hi), method="bounded", options={"xatol": 1e-10}
    )
    gain = -float(found.fun)
    if gain > current + DEFAULT_REFINE_TOL:
        x = float(np.clip(found.x, axis.lo, axis.hi))
        return scheme.with_fixed(**{axis.value: x}), gain
    return scheme, current


@timed("optimize_setting")
def optimize_setting(
    template: EncodingScheme,
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig | None = None,
    resolution: int = DEFAULT_SCAN_NODES,
    *,
    refine: bool = True,
) -> OptimalSetting:
    """
    Grid argmax of the average gain over both fixed parameters, then a local polish.

    Grid ties within 1e-12 go to the smaller parameter values. The refinement
    runs ``scipy.optimize.minimize_scalar`` on each axis within one grid step and
    is kept only if it gains more than 1e-12 bits.

    Example:
        ```python
        template = EncodingScheme.of("theta", alpha=0.0, psi=0.0)
        best = optimize_setting(template, uniform_prior(Parameter.THETA))
        best.fixed_values  # {alpha: pi/4, psi: 0.0}, avg_gain ~ 0.4427
        ```
    """
    if resolution < 2:
        raise InvalidConfigurationError(
            "resolution must be at least 2 per axis", details={"resolution": resolution}
        )
    quad = quad or QuadratureConfig()
    axis_a, axis_b = template.message_param.others()
    grid_a = ScanGrid.full(axis_a, resolution)
    grid_b = ScanGrid.full(axis_b, resolution)
    gains = scan2d(template, grid_a, grid_b, prior, quad).matrix

    best = float(np.max(gains))
    i, j = (int(k) for k in np.argwhere(gains >= best - _TIE_TOL)[0])
    scheme = template.with_fixed(
        **{axis_a.value: float(grid_a.values()[i]), axis_b.value: float(grid_b.values()[j])}
    )
    grid_gain = float(gains[i, j])

    gain, refined = grid_gain, False
    if refine:
        for axis, grid in ((axis_a, grid_a), (axis_b, grid_b)):
            step = (grid.hi - grid.lo) / (grid.n - 1)
            scheme, new_gain = _refine_axis(scheme, axis, step, prior, quad, gain)
            refined = refined or new_gain > gain
            gain = new_gain

    logger.info(
        "optimal_setting_found",
        scheme=scheme.describe(),
        prior=prior.label(),
        avg_gain=gain,
        refined=refined,
    )
    return OptimalSetting(
        scheme=scheme, prior=prior, avg_gain=gain, grid_gain=grid_gain, refined=refined
    )
