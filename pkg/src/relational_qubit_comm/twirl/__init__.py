"""Collective SU(2) twirling and total-spin measurement."""

from relational_qubit_comm.twirl.channel import (
    twirl_analytic,
    twirl_deviation,
    twirl_monte_carlo,
)
from relational_qubit_comm.twirl.projectors import (
    OutcomeProbs,
    p_outcomes_state,
    p_singlet_array,
    p_singlet_closed,
    singlet_projector,
    triplet_projector,
)

__all__ = [
    "OutcomeProbs",
    "p_outcomes_state",
    "p_singlet_array",
    "p_singlet_closed",
    "singlet_projector",
    "triplet_projector",
    "twirl_analytic",
    "twirl_deviation",
    "twirl_monte_carlo",
]
