"""Prior distributions over a single encoded parameter."""

from __future__ import annotations

from typing import Annotated, Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from relational_qubit_comm.common.exceptions import InvalidInputError, OutOfRangeError
from relational_qubit_comm.common.types import Parameter


class Uniform(BaseModel):
    """Flat density 1/(hi - lo) on [lo, hi]."""

    kind: Literal["uniform"] = "uniform"
    lo: float = Field(allow_inf_nan=False)
    hi: float = Field(allow_inf_nan=False)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _ordered(self) -> Uniform:
        if not self.lo < self.hi:
            raise ValueError("uniform prior needs lo < hi")
        return self

    @property
    def density(self) -> float:
        return 1.0 / (self.hi - self.lo)

    @property
    def support(self) -> tuple[float, float]:
        return self.lo, self.hi

    def label(self) -> str:
        return "uniform"


class TwoPoint(BaseModel):
    """Mass weight0 at x0 and 1 - weight0 at x1."""

    kind: Literal["two_point"] = "two_point"
    x0: float = Field(allow_inf_nan=False)
    x1: float = Field(allow_inf_nan=False)
    weight0: float = Field(default=0.5, gt=0.0, lt=1.0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _distinct(self) -> TwoPoint:
        if self.x0 == self.x1:
            raise ValueError("two-point prior needs distinct support points")
        return self

    @property
    def points(self) -> npt.NDArray[np.float64]:
        return np.array([self.x0, self.x1])

    @property
    def weights(self) -> npt.NDArray[np.float64]:
        return np.array([self.weight0, 1.0 - self.weight0])

    @property
    def support(self) -> tuple[float, float]:
        return min(self.x0, self.x1), max(self.x0, self.x1)

    def label(self) -> str:
        return "discrete"


PriorModel = Annotated[Uniform | TwoPoint, Field(discriminator="kind")]


def uniform_prior(param: Parameter) -> Uniform:
    """Uniform over the whole encoding range of ``param``."""
    return Uniform(lo=param.lo, hi=param.hi)


def discrete_prior(param: Parameter, weight0: float = 0.5) -> TwoPoint:
    """
    Equal-weight prior on the two ends of the encoding range.

    For alpha that is {0, pi/4}: a product state against a maximally entangled one.
    """
    return make_two_point(param.lo, param.hi, weight0)


def make_uniform(lo: float, hi: float) -> Uniform:
    try:
        return Uniform(lo=lo, hi=hi)
    except ValidationError as e:
        raise InvalidInputError(
            "invalid uniform prior", details={"lo": lo, "hi": hi}, cause=e
        ) from e


def make_two_point(x0: float, x1: float, weight0: float = 0.5) -> TwoPoint:
    try:
        return TwoPoint(x0=x0, x1=x1, weight0=weight0)
    except ValidationError as e:
        raise InvalidInputError(
            "invalid two-point prior",
            details={"x0": x0, "x1": x1, "weight0": weight0},
            cause=e,
        ) from e


def check_support(prior: Uniform | TwoPoint, param: Parameter) -> None:
    """Reject priors that put mass outside the encoding range of ``param``."""
    lo, hi = prior.support
    for value in (lo, hi):
        if value < param.lo or value > param.hi:
            raise OutOfRangeError(param.value, value, param.lo, param.hi)


def describe(prior: Uniform | TwoPoint) -> str:
    """Short human form, e.g. ``uniform[0, 3.14159]`` or ``discrete{0, 3.14159; 0.5}``."""
    if isinstance(prior, Uniform):
        return f"uniform[{prior.lo:.6g}, {prior.hi:.6g}]"
    return f"discrete{{{prior.x0:.6g}, {prior.x1:.6g}; {prior.weight0:.6g}}}"

