"""Canonical relative-parameter states and their collective-rotation invariants."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.common.types import RelativeParams, check_tolerance
from relational_qubit_comm.su2.gates import cnot, identity2, rotation_y, rotation_z, tensor
from relational_qubit_comm.su2.states import StateVector2Q, apply

_INVARIANT_SLACK = 1e-12


@dataclass(frozen=True)
class InvariantPair:
    """The complex invariants det = ad - bc and cross = b - c."""

    det_inv: complex
    cross_inv: complex

    def __post_init__(self) -> None:
        if not (cmath.isfinite(self.det_inv) and cmath.isfinite(self.cross_inv)):
            raise InvalidInputError("invariants must be finite")
        if abs(self.det_inv) > 0.5 + _INVARIANT_SLACK:
            raise InvalidInputError("|det| exceeds 1/2", details={"det": abs(self.det_inv)})
        if abs(self.cross_inv) > math.sqrt(2) + _INVARIANT_SLACK:
            raise InvalidInputError(
                "|cross| exceeds sqrt(2)", details={"cross": abs(self.cross_inv)}
            )

    def phase_fixed(self) -> InvariantPair:
        """
        Invariants after the global phase that makes det real and non-negative.

        A global phase e^{i eta} sends det -> e^{2 i eta} det and cross -> e^{i eta} cross,
        so the fixed cross invariant is defined up to sign. When det == 0 the phase is
        left untouched.
        """
        if self.det_inv == 0:
            return self
        eta = -0.5 * cmath.phase(self.det_inv)
        return InvariantPair(abs(self.det_inv) + 0j, cmath.exp(1j * eta) * self.cross_inv)


def prepare_canonical(p: RelativeParams) -> StateVector2Q:
    """
    The closed-form state e^{-i psi/2} cos(alpha)|0>|n> + e^{i psi/2} sin(alpha)|1>|n_perp>.

    |n> = cos(theta/2)|0> + sin(theta/2)|1>, |n_perp> = -sin(theta/2)|0> + cos(theta/2)|1>.
    """
    alpha, theta, psi = p.as_tuple()
    lead = cmath.exp(-0.5j * psi) * math.cos(alpha)
    trail = cmath.exp(0.5j * psi) * math.sin(alpha)
    ct, st = math.cos(theta / 2), math.sin(theta / 2)
    return StateVector2Q(np.array([lead * ct, lead * st, -trail * st, trail * ct]))


def prepare_via_circuit(p: RelativeParams) -> StateVector2Q:
    """(R_z(psi) x R_y(theta)) CNOT (R_y(2 alpha) x I) |00>."""
    alpha, theta, psi = p.as_tuple()
    entangle = cnot() @ tensor(rotation_y(2 * alpha), identity2())
    circuit = tensor(rotation_z(psi), rotation_y(theta)) @ entangle
    return apply(circuit, StateVector2Q.basis("00"))


def invariants_of(s: StateVector2Q) -> InvariantPair:
    a, b, c, d = s.amps
    return InvariantPair(complex(a * d - b * c), complex(b - c))


def phase_fixed(s: StateVector2Q) -> StateVector2Q:
    """s times the global phase that makes ad - bc real and non-negative."""
    det = invariants_of(s).det_inv
    if det == 0:
        return s
    return s.with_phase(-0.5 * cmath.phase(det))


def concurrence(s: StateVector2Q) -> float:
    """2|ad - bc|, clamped to [0, 1]."""
    return min(1.0, 2.0 * abs(invariants_of(s).det_inv))


def orbit_equal(s1: StateVector2Q, s2: StateVector2Q, tol: float) -> bool:
    """
    Whether two states differ only by a collective rotation and a global phase.

    Compares |det|, then the phase-fixed cross invariants up to sign. In the
    product case (|det| <= tol) only |cross| is compared.
    """
    check_tolerance(tol)
    inv1, inv2 = invariants_of(s1), invariants_of(s2)
    if abs(abs(inv1.det_inv) - abs(inv2.det_inv)) > tol:
        return False
    if max(abs(inv1.det_inv), abs(inv2.det_inv)) <= tol:
        return abs(abs(inv1.cross_inv) - abs(inv2.cross_inv)) <= tol
    x1, x2 = inv1.phase_fixed().cross_inv, inv2.phase_fixed().cross_inv
    return min(abs(x1 - x2), abs(x1 + x2)) <= tol
