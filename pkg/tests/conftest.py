"""Shared fixtures."""

import math

import numpy as np
import pytest
import structlog
from scipy import integrate
from scipy.special import xlogy

from relational_qubit_comm.common.types import RelativeParams
from relational_qubit_comm.inference.quadrature import QuadratureConfig
from relational_qubit_comm.su2.sampling import RandomStream

SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2)


def binary_entropy(p: float) -> float:
    return float(-(xlogy(p, p) + xlogy(1.0 - p, 1.0 - p)) / math.log(2))


def uniform_theta_gain(alpha: float, psi: float) -> float:
    """Theta-encoding gain under the uniform prior, integrated adaptively."""
    scale = (1.0 + math.sin(2 * alpha) * math.cos(psi)) / 4.0
    mean_entropy, _ = integrate.quad(
        lambda t: binary_entropy((1.0 - math.cos(t)) * scale), 0.0, math.pi, epsabs=1e-13
    )
    return binary_entropy(scale) - mean_entropy / math.pi


class IdentityStream:
    """Stream stub whose quaternions are all (1, 0, 0, 0), i.e. U = I."""

    seed = 0

    def standard_normal(self, size: int) -> np.ndarray:
        return np.tile([1.0, 0.0, 0.0, 0.0], size // 4)


@pytest.fixture
def stream() -> RandomStream:
    return RandomStream(seed=20240611)


@pytest.fixture
def identity_stream() -> IdentityStream:
    return IdentityStream()


@pytest.fixture
def coarse_quad() -> QuadratureConfig:
    """Cheap quadrature for tests that check structure rather than digits."""
    return QuadratureConfig(n_points=257)


@pytest.fixture
def generic_params() -> RelativeParams:
    return RelativeParams.of(0.3, 1.1, 0.7)


@pytest.fixture(autouse=True)
def _reset_logging():
    """CLI runs reconfigure structlog onto captured streams; undo that after each test."""
    yield
    structlog.reset_defaults()
