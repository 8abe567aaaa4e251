"""Total-spin projectors and singlet/triplet outcome probabilities."""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from relational_qubit_comm.common.types import PROB_CLAMP_TOL, RelativeParams
from relational_qubit_comm.su2.states import ComplexArray, StateVector2Q

_SINGLET = np.array([0.0, 1.0, -1.0, 0.0], dtype=np.complex128) / math.sqrt(2)


def _read_only(matrix: ComplexArray) -> ComplexArray:
    matrix.setflags(write=False)
    return matrix


SINGLET_PROJECTOR = _read_only(np.outer(_SINGLET, _SINGLET.conj()))
TRIPLET_PROJECTOR = _read_only(np.eye(4, dtype=np.complex128) - SINGLET_PROJECTOR)


class OutcomeProbs(BaseModel):
    """Probabilities of projecting onto the singlet (Pi_0) and triplet (Pi_1) subspaces."""

    model_config = ConfigDict(frozen=True)

    p_singlet: float = Field(ge=0.0, le=1.0)
    p_triplet: float = Field(ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _sums_to_one(self) -> OutcomeProbs:
        if abs(self.p_singlet + self.p_triplet - 1.0) > 1e-12:
            raise ValueError("outcome probabilities must sum to 1")
        return self

    @classmethod
    def of_singlet(cls, p: float) -> OutcomeProbs:
        """From the singlet probability, clamping roundoff within 1e-12 of [0, 1]."""
        if -PROB_CLAMP_TOL <= p < 0.0:
            p = 0.0
        elif 1.0 < p <= 1.0 + PROB_CLAMP_TOL:
            p = 1.0
        return cls(p_singlet=p, p_triplet=1.0 - p)

    def as_tuple(self) -> tuple[float, float]:
        return self.p_singlet, self.p_triplet


def singlet_projector() -> ComplexArray:
    """Rank-1 projector onto (|01> - |10>)/sqrt(2)."""
    return SINGLET_PROJECTOR


def triplet_projector() -> ComplexArray:
    """Rank-3 projector onto the symmetric subspace, I - Pi_0."""
    return TRIPLET_PROJECTOR


def p_singlet_closed(p: RelativeParams) -> float:
    """(1 - cos theta)(1 + sin 2alpha cos psi) / 4."""
    return (1.0 - math.cos(p.theta)) * (1.0 + math.sin(2 * p.alpha) * math.cos(p.psi)) / 4.0


def p_singlet_array(
    alpha: npt.ArrayLike, theta: npt.ArrayLike, psi: npt.ArrayLike
) -> npt.NDArray[np.float64]:
    """Broadcasting form of ``p_singlet_closed`` for grids of parameters."""
    a, t, s = np.broadcast_arrays(
        np.asarray(alpha, dtype=np.float64),
        np.asarray(theta, dtype=np.float64),
        np.asarray(psi, dtype=np.float64),
    )
    return (1.0 - np.cos(t)) * (1.0 + np.sin(2 * a) * np.cos(s)) / 4.0


def p_outcomes_state(s: StateVector2Q) -> OutcomeProbs:
    """<s|Pi_0|s> and its complement; equals the twirled-state probabilities."""
    p0 = float(np.vdot(s.amps, SINGLET_PROJECTOR @ s.amps).real)
    return OutcomeProbs.of_singlet(p0)
