"""Encoding schemes: one relative parameter carries the message, two are fixed."""

from __future__ import annotations

from enum import IntEnum

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from relational_qubit_comm.common.exceptions import InvalidInputError, NumericalDomainError
from relational_qubit_comm.common.types import PROB_CLAMP_TOL, Parameter, RelativeParams
from relational_qubit_comm.twirl.projectors import OutcomeProbs, p_singlet_array


class Outcome(IntEnum):
    """Result of the total-spin measurement."""

    SINGLET = 0
    TRIPLET = 1


class EncodingScheme(BaseModel):
    """
    Which parameter Alice modulates and where she pins the other two.

    Fixed values must lie in the encoding ranges alpha in [0, pi/4],
    theta in [0, pi], psi in [0, pi].

    Example:
        ```python
        scheme = EncodingScheme.of(Parameter.THETA, alpha=math.pi / 4, psi=0.0)
        likelihood(scheme, math.pi)  # OutcomeProbs(p_singlet=1.0, p_triplet=0.0)
        ```
    """

    model_config = ConfigDict(frozen=True)

    message_param: Parameter
    fixed_values: dict[Parameter, float]

    @model_validator(mode="after")
    def _fixed_complement(self) -> EncodingScheme:
        expected = set(self.message_param.others())
        if set(self.fixed_values) != expected:
            raise ValueError(
                f"fixed values must bind exactly {sorted(p.value for p in expected)}"
            )
        for param, value in self.fixed_values.items():
            param.check(value)
        return self

    @classmethod
    def of(cls, message_param: Parameter | str, **fixed: float) -> EncodingScheme:
        """Build from keyword bindings, raising InvalidInputError on bad values."""
        try:
            message = Parameter(message_param)
            bound = {Parameter(name): value for name, value in fixed.items()}
            return cls(message_param=message, fixed_values=bound)
        except InvalidInputError:
            raise
        except (ValueError, ValidationError) as e:
            raise InvalidInputError(
                "invalid encoding scheme",
                details={"message_param": str(message_param), "fixed": fixed},
                cause=e,
            ) from e

    def fixed(self, param: Parameter) -> float:
        return self.fixed_values[param]

    def with_fixed(self, **values: float) -> EncodingScheme:
        merged = {p.value: v for p, v in self.fixed_values.items()}
        merged.update(values)
        return EncodingScheme.of(self.message_param, **merged)

    def params_at(self, x: float) -> RelativeParams:
        """Full parameter triple with the message parameter set to x."""
        self.message_param.check(x)
        values = {p.value: v for p, v in self.fixed_values.items()}
        values[self.message_param.value] = x
        return RelativeParams.of(values["alpha"], values["theta"], values["psi"])

    def describe(self) -> str:
        fixed = ", ".join(f"{p.value}={v:.6g}" for p, v in sorted(self.fixed_values.items()))
        return f"{self.message_param.value}-encoding ({fixed})"


def clamp_probabilities(p: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Clamp roundoff within 1e-12 of [0, 1]; anything further out is an error."""
    if np.any(p < -PROB_CLAMP_TOL) or np.any(p > 1.0 + PROB_CLAMP_TOL):
        raise NumericalDomainError(
            "probability outside [0, 1] beyond roundoff",
            details={"min": float(np.min(p)), "max": float(np.max(p))},
        )
    return np.clip(p, 0.0, 1.0)


def singlet_likelihood(
    scheme: EncodingScheme, xs: npt.ArrayLike
) -> npt.NDArray[np.float64]:
    """p(singlet | x) at each message value in xs."""
    x = np.asarray(xs, dtype=np.float64)
    values: dict[Parameter, npt.ArrayLike] = dict(scheme.fixed_values)
    values[scheme.message_param] = x
    p = p_singlet_array(values[Parameter.ALPHA], values[Parameter.THETA], values[Parameter.PSI])
    return clamp_probabilities(np.broadcast_to(p, x.shape).astype(np.float64))


def outcome_likelihood(
    scheme: EncodingScheme, outcome: Outcome, xs: npt.ArrayLike
) -> npt.NDArray[np.float64]:
    singlet = singlet_likelihood(scheme, xs)
    return singlet if outcome is Outcome.SINGLET else 1.0 - singlet


def likelihood(scheme: EncodingScheme, x: float) -> OutcomeProbs:
    """Outcome probabilities for message value x."""
    scheme.message_param.check(x)
    p0 = float(singlet_likelihood(scheme, x))
    return OutcomeProbs.of_singlet(p0)
