"""Core type definitions, parameter ranges and tolerances."""

from __future__ import annotations

import math
from enum import StrEnum
from typing import NewType

from pydantic import BaseModel, ConfigDict, Field

from relational_qubit_comm.common.exceptions import InvalidInputError, OutOfRangeError

# Primitive Types
Radians = NewType("Radians", float)
Bits = NewType("Bits", float)

# Tolerances
UNITARY_TOL = 1e-12
NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
POSITIVITY_TOL = 1e-10
PROB_CLAMP_TOL = 1e-12
MARGINAL_FLOOR = 1e-15
IMPOSSIBLE_FLOOR = 1e-300

# Defaults
DEFAULT_QUAD_POINTS = 4097
DEFAULT_SCAN_NODES = 64
DEFAULT_REFINE_TOL = 1e-12


class Parameter(StrEnum):
    """The three frame-invariant parameters of a pure two-qubit state."""

    ALPHA = "alpha"  # entanglement, cos(alpha) is the larger Schmidt coefficient
    THETA = "theta"  # angle between the Bloch vectors of the Schmidt partners
    PSI = "psi"  # relative phase of the two Schmidt branches

    @property
    def lo(self) -> float:
        return 0.0

    @property
    def hi(self) -> float:
        return math.pi / 4 if self is Parameter.ALPHA else math.pi

    def others(self) -> tuple[Parameter, Parameter]:
        """The two parameters that are not this one, in canonical order."""
        rest = [p for p in Parameter if p is not self]
        return rest[0], rest[1]

    def check(self, value: float, *, lo: float | None = None) -> float:
        """Validate that value is finite and inside the encoding range."""
        low = self.lo if lo is None else lo
        if not math.isfinite(value):
            raise InvalidInputError(
                f"{self.value} must be finite", details={"parameter": self.value, "value": value}
            )
        if value < low or value > self.hi:
            raise OutOfRangeError(self.value, value, low, self.hi)
        return value


def check_finite(name: str, value: float) -> float:
    """Reject NaN and infinities."""
    if not math.isfinite(value):
        raise InvalidInputError(f"{name} must be finite", details={name: value})
    return value


def check_tolerance(tol: float) -> float:
    if not tol > 0:
        raise InvalidInputError("tolerance must be positive", details={"tol": tol})
    return tol


class RelativeParams(BaseModel):
    """The triple (alpha, theta, psi) of frame-invariant parameters.

    psi is accepted on [-pi, pi]: the mirrored orbits psi -> -psi are distinct
    when 0 < alpha < pi/4. Encoding schemes restrict psi to [0, pi].
    """

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(ge=0.0, le=math.pi / 4, allow_inf_nan=False)
    theta: float = Field(ge=0.0, le=math.pi, allow_inf_nan=False)
    psi: float = Field(ge=-math.pi, le=math.pi, allow_inf_nan=False)

    @classmethod
    def of(cls, alpha: float, theta: float, psi: float) -> RelativeParams:
        """Construct from raw numbers, raising InvalidInputError on bad values."""
        Parameter.ALPHA.check(alpha)
        Parameter.THETA.check(theta)
        Parameter.PSI.check(psi, lo=-math.pi)
        return cls(alpha=alpha, theta=theta, psi=psi)

    def get(self, name: Parameter) -> float:
        value: float = getattr(self, name.value)
        return value

    def replace(self, **values: float) -> RelativeParams:
        merged = {"alpha": self.alpha, "theta": self.theta, "psi": self.psi, **values}
        return RelativeParams.of(merged["alpha"], merged["theta"], merged["psi"])

    def as_tuple(self) -> tuple[float, float, float]:
        return self.alpha, self.theta, self.psi
