"""The collective SU(2) twirling channel on two qubits."""

from __future__ import annotations

import numpy as np
import structlog

from relational_qubit_comm.common.decorators import timed
from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.su2.sampling import RandomStream, haar_su2_batch
from relational_qubit_comm.su2.states import DensityMatrix4
from relational_qubit_comm.twirl.projectors import SINGLET_PROJECTOR, TRIPLET_PROJECTOR

logger = structlog.get_logger()

_BLOCK = 4096


def twirl_analytic(rho: DensityMatrix4) -> DensityMatrix4:
    """
    Haar average of (U x U) rho (U x U)^dagger in closed form.

    The collective representation splits into spin 0 and spin 1, each once, so
    the average is Tr(Pi_0 rho) Pi_0 + Tr(Pi_1 rho)/3 Pi_1.
    """
    if not isinstance(rho, DensityMatrix4):
        raise InvalidInputError("twirl expects a DensityMatrix4")
    p0 = rho.expectation(SINGLET_PROJECTOR)
    p1 = rho.expectation(TRIPLET_PROJECTOR)
    return DensityMatrix4(p0 * SINGLET_PROJECTOR + (p1 / 3.0) * TRIPLET_PROJECTOR)


@timed("twirl_monte_carlo")
def twirl_monte_carlo(rho: DensityMatrix4, n: int, stream: RandomStream) -> DensityMatrix4:
    """
    Unbiased estimate (1/n) sum (U x U) rho (U x U)^dagger over n Haar samples.

    Example:
        ```python
        rho = StateVector2Q.basis("00").outer()
        estimate = twirl_monte_carlo(rho, 100_000, RandomStream(seed=1))
        estimate.max_deviation(twirl_analytic(rho))  # ~ 1e-3
        ```
    """
    if n < 1:
        raise InvalidInputError("sample count must be at least 1", details={"n": n})
    total = np.zeros((4, 4), dtype=np.complex128)
    for start in range(0, n, _BLOCK):
        singles = haar_su2_batch(stream, min(_BLOCK, n - start))
        u = np.einsum("kab,kcd->kacbd", singles, singles).reshape(-1, 4, 4)
        total += (u @ rho.matrix @ u.conj().transpose(0, 2, 1)).sum(axis=0)
    total = 0.5 * (total + total.conj().T)
    total /= np.trace(total).real  # equals n up to roundoff
    logger.debug("twirl_sampled", samples=n, stream=repr(stream))
    return DensityMatrix4(total)


def twirl_deviation(rho: DensityMatrix4, n: int, stream: RandomStream) -> float:
    """Max-entry distance between the Monte Carlo estimate and the analytic twirl."""
    return twirl_monte_carlo(rho, n, stream).max_deviation(twirl_analytic(rho))
