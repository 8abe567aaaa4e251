"""Single- and two-qubit gates.

Conventions: R_y(phi) = exp(-i phi sigma_y / 2), R_z(psi) = diag(e^{-i psi/2}, e^{i psi/2}),
CNOT controlled on the first qubit.
"""

from __future__ import annotations

import math
from typing import Any, Literal

import numpy as np

from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.common.types import check_finite
from relational_qubit_comm.su2.states import Unitary2, Unitary4

PauliName = Literal["x", "y", "z"]

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def identity2() -> Unitary2:
    return Unitary2(np.eye(2, dtype=np.complex128))


def identity4() -> Unitary4:
    return Unitary4(np.eye(4, dtype=np.complex128))


def pauli(name: PauliName) -> Unitary2:
    try:
        return Unitary2(_PAULI[name])
    except KeyError as e:
        raise InvalidInputError(f"unknown Pauli matrix {name!r}") from e


def rotation_y(angle: float) -> Unitary2:
    """exp(-i angle sigma_y / 2)."""
    check_finite("angle", angle)
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return Unitary2(np.array([[c, -s], [s, c]], dtype=np.complex128))


def rotation_z(angle: float) -> Unitary2:
    """diag(e^{-i angle/2}, e^{i angle/2})."""
    check_finite("angle", angle)
    half = 0.5j * angle
    return Unitary2(np.diag([np.exp(-half), np.exp(half)]))


def cnot() -> Unitary4:
    """Control on the first qubit: swaps |10> and |11>."""
    return Unitary4(
        np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
            dtype=np.complex128,
        )
    )


def tensor(u: Unitary2 | Any, v: Unitary2 | Any) -> Unitary4:
    """Kronecker product, entry[(2i+k),(2j+l)] = u[i][j] * v[k][l]."""
    left = u if isinstance(u, Unitary2) else Unitary2(u)
    right = v if isinstance(v, Unitary2) else Unitary2(v)
    return Unitary4(np.kron(left.matrix, right.matrix))


def collective(u: Unitary2) -> Unitary4:
    """The collective rotation D(Omega) x D(Omega)."""
    return tensor(u, u)
