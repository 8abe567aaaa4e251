"""Immutable dense values at dimensions 2 and 4.

Basis order is |00>, |01>, |10>, |11>; the first tensor factor is the most
significant index, so amplitudes read (a, b, c, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.common.types import (
    HERMITIAN_TOL,
    NORM_TOL,
    POSITIVITY_TOL,
    UNITARY_TOL,
    check_tolerance,
)

ComplexArray = npt.NDArray[np.complex128]

BASIS_LABELS = ("00", "01", "10", "11")


def _frozen(values: Any, shape: tuple[int, ...], kind: str) -> ComplexArray:
    """Copy into a read-only complex128 array of the given shape."""
    try:
        array = np.array(values, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"{kind} entries must be numeric", cause=e) from e
    if array.shape != shape:
        raise InvalidInputError(
            f"{kind} must have shape {shape}", details={"shape": list(array.shape)}
        )
    if not np.all(np.isfinite(array)):
        raise InvalidInputError(f"{kind} entries must be finite")
    array.setflags(write=False)
    return array


def unitarity_defect(matrix: ComplexArray) -> float:
    """Max-entry norm of U^dagger U - I."""
    eye = np.eye(matrix.shape[0], dtype=np.complex128)
    return float(np.max(np.abs(matrix.conj().T @ matrix - eye)))


class _Unitary:
    """Shared behaviour of the fixed-dimension unitaries."""

    DIM: int
    matrix: ComplexArray

    def _validate(self, matrix: Any) -> None:
        array = _frozen(matrix, (self.DIM, self.DIM), type(self).__name__)
        defect = unitarity_defect(array)
        if defect > UNITARY_TOL:
            raise InvalidInputError(
                f"{type(self).__name__} is not unitary",
                details={"defect": defect, "tolerance": UNITARY_TOL},
            )
        object.__setattr__(self, "matrix", array)

    def dagger(self) -> Any:
        return type(self)(self.matrix.conj().T)

    def det(self) -> complex:
        return complex(np.linalg.det(self.matrix))

    def allclose(self, other: _Unitary, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, other.matrix, atol=atol, rtol=0.0))

    def __array__(self, dtype: Any = None, copy: Any = None) -> ComplexArray:
        return self.matrix if dtype is None else self.matrix.astype(dtype)


@dataclass(frozen=True, eq=False)
class Unitary2(_Unitary):
    """A 2x2 unitary, e.g. the single-qubit representation D(Omega)."""

    DIM = 2
    matrix: ComplexArray

    def __post_init__(self) -> None:
        self._validate(self.matrix)

    def __matmul__(self, other: Unitary2) -> Unitary2:
        return Unitary2(self.matrix @ other.matrix)


@dataclass(frozen=True, eq=False)
class Unitary4(_Unitary):
    """A 4x4 unitary on the two-qubit space."""

    DIM = 4
    matrix: ComplexArray

    def __post_init__(self) -> None:
        self._validate(self.matrix)

    def __matmul__(self, other: Unitary4) -> Unitary4:
        return Unitary4(self.matrix @ other.matrix)


@dataclass(frozen=True, eq=False)
class StateVector2Q:
    """A normalized pure two-qubit state a|00> + b|01> + c|10> + d|11>."""

    amps: ComplexArray

    def __post_init__(self) -> None:
        array = _frozen(self.amps, (4,), "StateVector2Q")
        norm_sq = float(np.vdot(array, array).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise InvalidInputError(
                "state is not normalized",
                details={"norm_squared": norm_sq, "tolerance": NORM_TOL},
            )
        object.__setattr__(self, "amps", array)

    @classmethod
    def normalized(cls, values: Any) -> StateVector2Q:
        """Build a state from any non-zero 4-vector by dividing out its norm."""
        array = _frozen(values, (4,), "StateVector2Q")
        norm = float(np.linalg.norm(array))
        if norm == 0.0:
            raise InvalidInputError("cannot normalize the zero vector")
        return cls(array / norm)

    @classmethod
    def basis(cls, label: str) -> StateVector2Q:
        amps = np.zeros(4, dtype=np.complex128)
        amps[BASIS_LABELS.index(label)] = 1.0
        return cls(amps)

    @property
    def a(self) -> complex:
        return complex(self.amps[0])

    @property
    def b(self) -> complex:
        return complex(self.amps[1])

    @property
    def c(self) -> complex:
        return complex(self.amps[2])

    @property
    def d(self) -> complex:
        return complex(self.amps[3])

    def coefficient_matrix(self) -> ComplexArray:
        """The 2x2 matrix [[a, b], [c, d]]; collective rotations act as D M D^T."""
        return self.amps.reshape(2, 2)

    def inner(self, other: StateVector2Q) -> complex:
        """<self|other>."""
        return complex(np.vdot(self.amps, other.amps))

    def with_phase(self, eta: float) -> StateVector2Q:
        return StateVector2Q(np.exp(1j * eta) * self.amps)

    def outer(self) -> DensityMatrix4:
        return DensityMatrix4(np.outer(self.amps, self.amps.conj()))


@dataclass(frozen=True, eq=False)
class DensityMatrix4:
    """A two-qubit density matrix.

    Eigenvalues in [-1e-10, 0) are clamped to zero and the trace renormalized;
    anything more negative is rejected.
    """

    matrix: ComplexArray

    def __post_init__(self) -> None:
        array = np.array(_frozen(self.matrix, (4, 4), "DensityMatrix4"))
        skew = float(np.max(np.abs(array - array.conj().T)))
        if skew > HERMITIAN_TOL:
            raise InvalidInputError("density matrix is not Hermitian", details={"defect": skew})
        trace = complex(np.trace(array))
        if abs(trace - 1.0) > HERMITIAN_TOL:
            raise InvalidInputError(
                "density matrix must have unit trace", details={"trace": trace.real}
            )
        array = 0.5 * (array + array.conj().T)
        eigvals, eigvecs = np.linalg.eigh(array)
        if eigvals[0] < -POSITIVITY_TOL:
            raise InvalidInputError(
                "density matrix is not positive semidefinite",
                details={"min_eigenvalue": float(eigvals[0]), "tolerance": POSITIVITY_TOL},
            )
        if eigvals[0] < 0.0:
            eigvals = np.clip(eigvals, 0.0, None)
            eigvals /= eigvals.sum()
            array = (eigvecs * eigvals) @ eigvecs.conj().T
        array.setflags(write=False)
        object.__setattr__(self, "matrix", array)

    def conjugate_by(self, u: Unitary4) -> DensityMatrix4:
        """U rho U^dagger."""
        return DensityMatrix4(u.matrix @ self.matrix @ u.dagger().matrix)

    def expectation(self, operator: ComplexArray) -> float:
        """Tr(operator rho) for a Hermitian operator."""
        return float(np.trace(operator @ self.matrix).real)

    def max_deviation(self, other: DensityMatrix4) -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))


def apply(u: Unitary4, state: StateVector2Q) -> StateVector2Q:
    """U|state>."""
    return StateVector2Q(u.matrix @ state.amps)


def equal_up_to_phase(s1: StateVector2Q, s2: StateVector2Q, tol: float) -> bool:
    """True iff |<s1|s2>| >= 1 - tol."""
    check_tolerance(tol)
    return abs(s1.inner(s2)) >= 1.0 - tol


def bloch_vector(qubit: Any) -> npt.NDArray[np.float64]:
    """Bloch vector of a single-qubit pure state (normalized internally)."""
    vec = np.asarray(qubit, dtype=np.complex128)
    vec = vec / np.linalg.norm(vec)
    u, v = vec
    return np.array(
        [
            2.0 * (u.conjugate() * v).real,
            2.0 * (u.conjugate() * v).imag,
            abs(u) ** 2 - abs(v) ** 2,
        ]
    )
