"""Bayesian update on singlet/triplet outcomes and the average information gain."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
import structlog
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.special import xlogy

from relational_qubit_comm.common.exceptions import ImpossibleOutcomeError, NumericalDomainError
from relational_qubit_comm.common.types import IMPOSSIBLE_FLOOR, MARGINAL_FLOOR
from relational_qubit_comm.inference.priors import PriorModel, TwoPoint, Uniform, check_support
from relational_qubit_comm.inference.quadrature import QuadratureConfig
from relational_qubit_comm.inference.scheme import EncodingScheme, Outcome, outcome_likelihood
from relational_qubit_comm.twirl.projectors import OutcomeProbs

logger = structlog.get_logger()

_GAIN_SLACK = 1e-10


@dataclass(frozen=True, eq=False)
class PosteriorDensity:
    """
    Posterior over the message parameter after one outcome.

    For a continuous prior ``values`` is a density sampled on ``nodes``; for a
    discrete prior it holds the posterior weights of the support points.
    """

    kind: Literal["continuous", "discrete"]
    outcome: Outcome
    nodes: npt.NDArray[np.float64]
    values: npt.NDArray[np.float64]
    prior_values: npt.NDArray[np.float64]
    marginal: float
    quad: QuadratureConfig

    def total(self) -> float:
        """Integral (or sum) of the posterior; 1 up to quadrature error."""
        if self.kind == "discrete":
            return float(np.sum(self.values))
        return self.quad.integrate(self.values, self.nodes)

    def mean(self) -> float:
        if self.kind == "discrete":
            return float(np.dot(self.nodes, self.values))
        return self.quad.integrate(self.nodes * self.values, self.nodes)

    def divergence_bits(self) -> float:
        """KL divergence of the posterior from the prior, in bits."""
        terms = kl_terms(self.values, self.prior_values)
        if self.kind == "discrete":
            return float(np.sum(terms))
        return self.quad.integrate(terms, self.nodes)


class InfoGainResult(BaseModel):
    """Outcome probabilities, per-outcome gains and their average (bits)."""

    model_config = ConfigDict(frozen=True)

    p_outcome: tuple[float, float]
    gain_per_outcome: tuple[float, float]
    avg_gain: float
    scheme: EncodingScheme
    prior: PriorModel

    @model_validator(mode="after")
    def _consistent(self) -> InfoGainResult:
        if abs(sum(self.p_outcome) - 1.0) > 1e-10:
            raise ValueError("outcome probabilities must sum to 1")
        expected = sum(p * g for p, g in zip(self.p_outcome, self.gain_per_outcome, strict=True))
        if abs(self.avg_gain - expected) > 1e-10:
            raise ValueError("avg_gain must equal the outcome-weighted gains")
        if not 0.0 <= self.avg_gain <= 1.0 + 1e-9:
            raise ValueError("avg_gain must lie in [0, 1] bits")
        return self


def kl_terms(
    t: npt.NDArray[np.float64], q: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    """
    Pointwise t log2(t / q) with 0 log 0 = 0.

    Raises:
        NumericalDomainError: where q == 0 but t > 0
    """
    bad = (q <= 0.0) & (t > 0.0)
    if np.any(bad):
        raise NumericalDomainError(
            "posterior mass where the prior vanishes", details={"points": int(np.sum(bad))}
        )
    safe_q = np.where(q > 0.0, q, 1.0)
    result: npt.NDArray[np.float64] = (xlogy(t, t) - xlogy(t, safe_q)) / math.log(2)
    return result


def _prior_grid(
    prior: Uniform | TwoPoint, quad: QuadratureConfig
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Nodes and prior density (or weights) on them."""
    if isinstance(prior, TwoPoint):
        return prior.points, prior.weights
    nodes = quad.nodes(prior.lo, prior.hi)
    return nodes, np.full_like(nodes, prior.density)


def _marginal(
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig,
    nodes: npt.NDArray[np.float64],
    joint: npt.NDArray[np.float64],
) -> float:
    if isinstance(prior, TwoPoint):
        return float(np.sum(joint))
    return quad.integrate(joint, nodes)


def posterior(
    scheme: EncodingScheme,
    prior: Uniform | TwoPoint,
    outcome: Outcome,
    quad: QuadratureConfig | None = None,
) -> PosteriorDensity:
    """
    p(x | outcome) = p(outcome | x) p(x) / p(outcome).

    Raises:
        ImpossibleOutcomeError: if p(outcome) <= 1e-300
    """
    quad = quad or QuadratureConfig()
    check_support(prior, scheme.message_param)
    nodes, prior_values = _prior_grid(prior, quad)
    joint = prior_values * outcome_likelihood(scheme, outcome, nodes)
    marginal = _marginal(prior, quad, nodes, joint)
    if marginal <= IMPOSSIBLE_FLOOR:
        raise ImpossibleOutcomeError(
            f"outcome {outcome.name.lower()} has zero probability",
            details={"scheme": scheme.describe(), "marginal": marginal},
        )
    return PosteriorDensity(
        kind="discrete" if isinstance(prior, TwoPoint) else "continuous",
        outcome=outcome,
        nodes=nodes,
        values=joint / marginal,
        prior_values=prior_values,
        marginal=marginal,
        quad=quad,
    )


def marginals(
    scheme: EncodingScheme,
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig | None = None,
) -> OutcomeProbs:
    """p(singlet) and p(triplet) averaged over the prior."""
    quad = quad or QuadratureConfig()
    check_support(prior, scheme.message_param)
    nodes, prior_values = _prior_grid(prior, quad)
    joint = prior_values * outcome_likelihood(scheme, Outcome.SINGLET, nodes)
    return OutcomeProbs.of_singlet(_marginal(prior, quad, nodes, joint))


def info_gain(
    scheme: EncodingScheme,
    prior: Uniform | TwoPoint,
    quad: QuadratureConfig | None = None,
) -> InfoGainResult:
    """
    Average over outcomes of the prior-to-posterior KL divergence, in bits.

    This is the mutual information between the message parameter and the
    measurement outcome. Outcomes with marginal below 1e-15 contribute nothing.

    Example:
        ```python
        scheme = EncodingScheme.of("theta", alpha=math.pi / 4, psi=0.0)
        info_gain(scheme, uniform_prior(Parameter.THETA)).avg_gain  # 0.4427
        ```
    """
    quad = quad or QuadratureConfig()
    probs = marginals(scheme, prior, quad)
    p_outcome = probs.as_tuple()
    gains: list[float] = []
    for outcome, marginal in zip(Outcome, p_outcome, strict=True):
        if marginal < MARGINAL_FLOOR:
            gains.append(0.0)
            continue
        gain = posterior(scheme, prior, outcome, quad).divergence_bits()
        if gain < -_GAIN_SLACK:
            raise NumericalDomainError(
                "negative information gain",
                details={"outcome": outcome.name.lower(), "gain": gain},
            )
        gains.append(max(gain, 0.0))

    avg = p_outcome[0] * gains[0] + p_outcome[1] * gains[1]
    logger.debug(
        "info_gain_evaluated",
        scheme=scheme.describe(),
        prior=prior.label(),
        avg_gain=avg,
    )
    return InfoGainResult(
        p_outcome=p_outcome,
        gain_per_outcome=(gains[0], gains[1]),
        avg_gain=avg,
        scheme=scheme,
        prior=prior,
    )
