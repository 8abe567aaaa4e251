"""Quadrature over a prior's support."""

from __future__ import annotations

from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from scipy import integrate

from relational_qubit_comm.common.exceptions import InvalidConfigurationError
from relational_qubit_comm.common.types import DEFAULT_QUAD_POINTS


class QuadratureConfig(BaseModel):
    """Composite Simpson rule on an odd number of equally spaced nodes."""

    model_config = ConfigDict(frozen=True)

    n_points: int = Field(default=DEFAULT_QUAD_POINTS, ge=3)
    rule: Literal["simpson"] = "simpson"

    @field_validator("n_points")
    @classmethod
    def validate_odd(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("composite Simpson needs an odd number of points")
        return v

    @classmethod
    def with_points(cls, n_points: int) -> QuadratureConfig:
        try:
            return cls(n_points=n_points)
        except ValidationError as e:
            raise InvalidConfigurationError(
                "invalid quadrature", details={"n_points": n_points}, cause=e
            ) from e

    def nodes(self, lo: float, hi: float) -> npt.NDArray[np.float64]:
        return np.linspace(lo, hi, self.n_points)

    def integrate(
        self, values: npt.NDArray[np.float64], nodes: npt.NDArray[np.float64]
    ) -> float:
        """Integral of samples taken at ``nodes``."""
        return float(integrate.simpson(values, x=nodes))
