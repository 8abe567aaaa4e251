"""Priors, likelihoods, posteriors and information gain for one encoded parameter."""

from relational_qubit_comm.inference.infogain import (
    InfoGainResult,
    PosteriorDensity,
    info_gain,
    kl_terms,
    marginals,
    posterior,
)
from relational_qubit_comm.inference.priors import (
    PriorModel,
    TwoPoint,
    Uniform,
    check_support,
    describe,
    discrete_prior,
    make_two_point,
    make_uniform,
    uniform_prior,
)
from relational_qubit_comm.inference.quadrature import QuadratureConfig
from relational_qubit_comm.inference.scheme import (
    EncodingScheme,
    Outcome,
    clamp_probabilities,
    likelihood,
    outcome_likelihood,
    singlet_likelihood,
)

__all__ = [
    "EncodingScheme",
    "InfoGainResult",
    "Outcome",
    "PosteriorDensity",
    "PriorModel",
    "QuadratureConfig",
    "TwoPoint",
    "Uniform",
    "check_support",
    "clamp_probabilities",
    "describe",
    "discrete_prior",
    "info_gain",
    "kl_terms",
    "likelihood",
    "make_two_point",
    "make_uniform",
    "marginals",
    "outcome_likelihood",
    "posterior",
    "singlet_likelihood",
    "uniform_prior",
]
