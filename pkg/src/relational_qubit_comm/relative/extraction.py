"""Recovering (alpha, theta, psi) and Schmidt data from an arbitrary pure state."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import structlog

from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.common.types import RelativeParams
from relational_qubit_comm.relative.state import invariants_of, phase_fixed
from relational_qubit_comm.su2.states import ComplexArray, StateVector2Q, bloch_vector

logger = structlog.get_logger()

DEGENERACY_TOL = 1e-10
_UNIT_TOL = 1e-12


def reduced_density(s: StateVector2Q) -> ComplexArray:
    """Reduced density matrix of the first qubit, M M^dagger."""
    m = s.coefficient_matrix()
    return m @ m.conj().T


@dataclass(frozen=True)
class SchmidtForm:
    """
    Schmidt-like decomposition e^{-i psi/2} l0 |m>|n> + e^{i psi/2} l1 |m_perp>|n_perp>.

    m_vec and n_vec are Bloch vectors; phase is psi.
    """

    lambda0: float
    lambda1: float
    m_vec: tuple[float, float, float]
    n_vec: tuple[float, float, float]
    phase: float
    degenerate: bool = False

    def __post_init__(self) -> None:
        if abs(self.lambda0**2 + self.lambda1**2 - 1.0) > _UNIT_TOL:
            raise InvalidInputError("Schmidt coefficients must satisfy l0^2 + l1^2 = 1")
        for name in ("m_vec", "n_vec"):
            if abs(math.hypot(*getattr(self, name)) - 1.0) > _UNIT_TOL:
                raise InvalidInputError(f"{name} must be a unit vector")

    @property
    def theta(self) -> float:
        """Angle between the Bloch vectors of the two Schmidt partners."""
        cos = float(np.clip(np.dot(self.m_vec, self.n_vec), -1.0, 1.0))
        return math.acos(cos)


@dataclass(frozen=True)
class Extraction:
    """Extracted parameters with identifiability markers."""

    params: RelativeParams
    psi_identifiable: bool
    schmidt_degenerate: bool


def _alpha(s: StateVector2Q, det_abs: float) -> float:
    """alpha = asin(2|det|)/2, evaluated through atan2 so it stays accurate near pi/4."""
    rho = reduced_density(s)
    spread = math.hypot(float((rho[0, 0] - rho[1, 1]).real), 2.0 * abs(rho[0, 1]))
    return min(math.pi / 4, 0.5 * math.atan2(2.0 * det_abs, spread))


def _schmidt_partners(
    s: StateVector2Q,
) -> tuple[float, float, ComplexArray, ComplexArray, bool]:
    """Dominant Schmidt vector m of qubit 1 and its normalized partner n on qubit 2."""
    eigvals, eigvecs = np.linalg.eigh(reduced_density(s))
    eigvals = np.clip(eigvals[::-1], 0.0, None)
    degenerate = bool(eigvals[0] - eigvals[1] <= DEGENERACY_TOL)
    if degenerate:
        # Every vector is an eigenvector; take the one closest to |0>.
        m = np.array([1.0, 0.0], dtype=np.complex128)
    else:
        m = eigvecs[:, 1]
        if abs(m[0]) > 0:
            m = m * np.exp(-1j * np.angle(m[0]))
    partner = m.conj() @ s.coefficient_matrix()
    lambda0 = float(np.linalg.norm(partner))
    lambda1 = math.sqrt(max(0.0, 1.0 - lambda0**2))
    return lambda0, lambda1, m, partner / lambda0, degenerate


def _bloch_tuple(vec: npt.NDArray[np.float64]) -> tuple[float, float, float]:
    unit = vec / np.linalg.norm(vec)
    return float(unit[0]), float(unit[1]), float(unit[2])


def extract(s: StateVector2Q) -> Extraction:
    """
    Recover (alpha, theta, psi) such that prepare_canonical lands on the orbit of s.

    Generic states are solved from the phase-fixed cross invariant
    beta = sin(theta/2)[(cos a + sin a) cos(psi/2) - i (cos a - sin a) sin(psi/2)],
    with the sign of beta chosen so that psi falls in (-pi, pi]. Product states
    and states with sin(theta/2) = 0 report psi = 0. Maximally entangled states
    use the Schmidt convention m = |0> and psi in [0, pi].
    """
    inv = invariants_of(s)
    det_abs = abs(inv.det_inv)
    alpha = _alpha(s, det_abs)

    if det_abs <= DEGENERACY_TOL:
        half = min(1.0, abs(inv.cross_inv))
        params = RelativeParams.of(0.0, 2.0 * math.asin(half), 0.0)
        return Extraction(params, psi_identifiable=False, schmidt_degenerate=False)

    cos_a, sin_a = math.cos(alpha), math.sin(alpha)
    beta = inv.phase_fixed().cross_inv

    if cos_a - sin_a <= DEGENERACY_TOL:
        # With m = |0> and ad - bc > 0 the state is |0>(a, b) + |1>(-b*, a*).
        fixed = phase_fixed(s)
        a, b = fixed.a, fixed.b
        theta = 2.0 * math.atan2(abs(b), abs(a))
        if math.sin(theta / 2) ** 2 <= DEGENERACY_TOL:
            psi, identifiable = 0.0, False
        else:
            psi = abs(math.remainder(-2.0 * math.atan2(b.imag, b.real), 2.0 * math.pi))
            identifiable = True
        logger.debug("extract_maximally_entangled", theta=theta, psi=psi)
        params = RelativeParams.of(math.pi / 4, theta, psi)
        return Extraction(params, psi_identifiable=identifiable, schmidt_degenerate=True)

    x = beta.real / (cos_a + sin_a)
    y = -beta.imag / (cos_a - sin_a)
    if x < 0 or (abs(x) <= _UNIT_TOL and y < 0):
        x, y = -x, -y
    half = min(1.0, math.hypot(x, y))
    theta = 2.0 * math.asin(half)
    if half <= DEGENERACY_TOL:
        return Extraction(
            RelativeParams.of(alpha, theta, 0.0), psi_identifiable=False, schmidt_degenerate=False
        )
    psi = 2.0 * math.atan2(y, x)
    if psi <= -math.pi + _UNIT_TOL:
        psi = math.pi
    return Extraction(
        RelativeParams.of(alpha, theta, psi), psi_identifiable=True, schmidt_degenerate=False
    )


def extract_params(s: StateVector2Q) -> RelativeParams:
    return extract(s).params


def schmidt_form(s: StateVector2Q) -> SchmidtForm:
    """Schmidt coefficients and Bloch vectors from the reduced density of qubit 1."""
    lambda0, lambda1, m, n, degenerate = _schmidt_partners(s)
    return SchmidtForm(
        lambda0=lambda0,
        lambda1=lambda1,
        m_vec=_bloch_tuple(bloch_vector(m)),
        n_vec=_bloch_tuple(bloch_vector(n)),
        phase=extract(s).params.psi,
        degenerate=degenerate,
    )
