"""Tests for gates, states and Haar sampling."""

import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from conftest import SINGLET
from relational_qubit_comm.common.exceptions import InvalidInputError, RelFrameError
from relational_qubit_comm.su2 import (
    DensityMatrix4,
    RandomStream,
    StateVector2Q,
    Unitary2,
    apply,
    bloch_vector,
    cnot,
    collective,
    equal_up_to_phase,
    haar_local_pair,
    haar_state,
    haar_su2,
    haar_su2_batch,
    identity2,
    identity4,
    pauli,
    quaternion_to_su2,
    rotation_y,
    rotation_z,
    tensor,
)


class TestGates:
    """Test gate constructors."""

    def test_paulis_are_unitary_and_square_to_identity(self):
        """Test every Pauli squares to the identity."""
        for name in ("x", "y", "z"):
            p = pauli(name)
            assert (p @ p).allclose(identity2())

    def test_unknown_pauli(self):
        """Test an unknown Pauli name is rejected."""
        with pytest.raises(InvalidInputError):
            pauli("w")  # type: ignore[arg-type]

    def test_errors_serialize(self):
        """Test library errors carry code, message and details in to_dict."""
        with pytest.raises(RelFrameError) as info:
            rotation_y(math.inf)
        error = info.value.to_dict()["error"]
        assert error["code"] == error["type"] == "InvalidInputError"
        assert error["message"] == "angle must be finite"
        assert error["details"] == {"angle": math.inf}

    def test_rotation_y_half_turn(self):
        """Test R_y(pi) maps |0> to |1>."""
        np.testing.assert_allclose(rotation_y(math.pi).matrix, [[0, -1], [1, 0]], atol=1e-15)

    def test_rotation_z_is_diagonal_phase(self):
        """Test R_z(psi) = diag(e^{-i psi/2}, e^{i psi/2})."""
        psi = 0.9
        expected = np.diag([np.exp(-0.45j), np.exp(0.45j)])
        np.testing.assert_allclose(rotation_z(psi).matrix, expected, atol=1e-15)

    def test_rotations_reject_non_finite_angles(self):
        """Test NaN and infinite angles are rejected."""
        with pytest.raises(InvalidInputError):
            rotation_y(float("nan"))
        with pytest.raises(InvalidInputError):
            rotation_z(float("inf"))

    def test_cnot_flips_target_when_control_set(self):
        """Test CNOT sends |10> to |11> and leaves |01> alone."""
        out = apply(cnot(), StateVector2Q.basis("10"))
        assert equal_up_to_phase(out, StateVector2Q.basis("11"), 1e-14)
        out = apply(cnot(), StateVector2Q.basis("01"))
        assert equal_up_to_phase(out, StateVector2Q.basis("01"), 1e-14)

    def test_tensor_index_convention(self):
        """Test tensor(X, I) flips the first qubit."""
        out = apply(tensor(pauli("x"), identity2()), StateVector2Q.basis("01"))
        assert equal_up_to_phase(out, StateVector2Q.basis("11"), 1e-14)

    def test_tensor_rejects_non_unitary(self):
        """Test non-unitary factors are rejected."""
        with pytest.raises(InvalidInputError):
            tensor(np.array([[1, 1], [0, 1]]), identity2())

    def test_unitary_rejects_wrong_shape(self):
        """Test a 3x3 matrix is not a Unitary2."""
        with pytest.raises(InvalidInputError):
            Unitary2(np.eye(3))

    def test_tensor_mixed_product(self, stream):
        """Test (u x v)(u2 x v2) = (u u2) x (v v2)."""
        u, v, u2, v2 = (haar_su2(stream) for _ in range(4))
        assert (tensor(u, v) @ tensor(u2, v2)).allclose(tensor(u @ u2, v @ v2))

    def test_collective_rotation_fixes_singlet(self, stream):
        """Test U x U maps the singlet to itself up to phase."""
        singlet = StateVector2Q(SINGLET)
        for _ in range(20):
            rotated = apply(collective(haar_su2(stream)), singlet)
            assert equal_up_to_phase(rotated, singlet, 1e-12)

    def test_collective_identity(self):
        """Test the collective identity is I4."""
        assert collective(identity2()).allclose(identity4())


class TestStates:
    """Test state and density matrix values."""

    def test_unnormalized_state_rejected(self):
        """Test states off the unit sphere are rejected."""
        with pytest.raises(InvalidInputError):
            StateVector2Q(np.array([1.0, 1.0, 0.0, 0.0]))

    def test_normalized_constructor(self):
        """Test normalized divides out the norm."""
        s = StateVector2Q.normalized([1.0, 1.0, 0.0, 0.0])
        assert s.a == pytest.approx(1 / math.sqrt(2))
        assert s.b == pytest.approx(1 / math.sqrt(2))

    def test_zero_vector_cannot_be_normalized(self):
        """Test the zero vector is rejected."""
        with pytest.raises(InvalidInputError):
            StateVector2Q.normalized([0, 0, 0, 0])

    def test_amplitudes_are_read_only(self):
        """Test state arrays cannot be mutated in place."""
        s = StateVector2Q.basis("00")
        with pytest.raises(ValueError):
            s.amps[0] = 0.0

    def test_non_finite_amplitudes_rejected(self):
        """Test NaN amplitudes are rejected."""
        with pytest.raises(InvalidInputError):
            StateVector2Q(np.array([float("nan"), 0, 0, 0]))

    def test_density_requires_hermitian(self):
        """Test a non-Hermitian matrix is not a density matrix."""
        m = np.diag([1.0, 0, 0, 0]).astype(complex)
        m[0, 1] = 0.1
        with pytest.raises(InvalidInputError):
            DensityMatrix4(m)

    def test_density_requires_unit_trace(self):
        """Test trace must be one."""
        with pytest.raises(InvalidInputError):
            DensityMatrix4(np.eye(4) / 2)

    def test_small_negative_eigenvalue_clamped(self):
        """Test eigenvalues within 1e-10 below zero are clipped."""
        rho = DensityMatrix4(np.diag([1.0 + 1e-11, -1e-11, 0.0, 0.0]))
        assert np.min(np.linalg.eigvalsh(rho.matrix)) >= -1e-15
        assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-14)

    def test_large_negative_eigenvalue_rejected(self):
        """Test clear positivity violations are rejected."""
        with pytest.raises(InvalidInputError):
            DensityMatrix4(np.diag([1.1, -0.1, 0.0, 0.0]))

    def test_conjugate_by_identity(self):
        """Test conjugating by I leaves rho unchanged."""
        rho = StateVector2Q.basis("01").outer()
        assert rho.conjugate_by(identity4()).max_deviation(rho) == 0.0

    def test_bloch_vectors(self):
        """Test Bloch vectors of |0>, |1> and |+>."""
        np.testing.assert_allclose(bloch_vector([1, 0]), [0, 0, 1])
        np.testing.assert_allclose(bloch_vector([0, 1]), [0, 0, -1])
        np.testing.assert_allclose(bloch_vector([1, 1]), [1, 0, 0], atol=1e-15)

    def test_equal_up_to_phase(self):
        """Test a global phase does not change the ray."""
        s = StateVector2Q.normalized([1, 2j, -1, 0.5])
        assert equal_up_to_phase(s, s.with_phase(1.234), 1e-12)
        assert not equal_up_to_phase(s, StateVector2Q.basis("00"), 1e-3)


class TestSampling:
    """Test seeded streams and Haar sampling."""

    def test_same_seed_same_sequence(self):
        """Test streams are reproducible."""
        a = RandomStream(seed=5).standard_normal(8)
        b = RandomStream(seed=5).standard_normal(8)
        np.testing.assert_array_equal(a, b)

    def test_spawned_streams_differ(self):
        """Test children of one root are independent of each other."""
        root = RandomStream(seed=5)
        a = root.spawn(0).standard_normal(4)
        b = root.spawn(1).standard_normal(4)
        assert not np.array_equal(a, b)

    def test_spawn_is_position_independent(self):
        """Test a child stream does not depend on how much the parent consumed."""
        root = RandomStream(seed=9)
        early = root.spawn(3).standard_normal(4)
        root.standard_normal(100)
        late = root.spawn(3).standard_normal(4)
        np.testing.assert_array_equal(early, late)

    def test_invalid_seed_and_algorithm(self):
        """Test negative seeds and unknown algorithms are rejected."""
        with pytest.raises(InvalidInputError):
            RandomStream(seed=-1)
        with pytest.raises(InvalidInputError):
            RandomStream(seed=1, algorithm="xorshift")

    def test_quaternion_identity(self):
        """Test (1, 0, 0, 0) maps to the identity."""
        assert quaternion_to_su2([1, 0, 0, 0]).allclose(identity2())

    def test_haar_su2_has_unit_determinant(self, stream):
        """Test samples lie in SU(2)."""
        for _ in range(50):
            assert haar_su2(stream).det() == pytest.approx(1.0, abs=1e-12)

    def test_batch_matches_sequential_draws(self):
        """Test the batch sampler consumes normals like repeated haar_su2 calls."""
        batch = haar_su2_batch(RandomStream(seed=3), 5)
        sequential = RandomStream(seed=3)
        for k in range(5):
            np.testing.assert_allclose(batch[k], haar_su2(sequential).matrix, atol=1e-15)

    def test_haar_mean_vanishes(self):
        """Test the Haar average of U is close to zero."""
        batch = haar_su2_batch(RandomStream(seed=11), 20_000)
        assert np.max(np.abs(batch.mean(axis=0))) < 0.03

    def test_haar_twirl_of_a_pure_qubit_is_maximally_mixed(self):
        """Test the average of U|0><0|U^dagger over 10^5 samples is I/2 within 0.01."""
        columns = haar_su2_batch(RandomStream(seed=5), 100_000)[:, :, 0]
        average = np.einsum("ni,nj->ij", columns, columns.conj()) / len(columns)
        assert np.max(np.abs(average - np.eye(2) / 2)) < 0.01

    def test_dagger_inverts(self, stream):
        """Test U^dagger U is the identity."""
        u = haar_su2(stream)
        assert (u.dagger() @ u).allclose(identity2())

    def test_local_pair_and_state(self, stream):
        """Test local pairs are unitary and random states normalized."""
        u = haar_local_pair(stream)
        assert np.allclose(u.matrix.conj().T @ u.matrix, np.eye(4), atol=1e-12)
        s = haar_state(stream)
        assert np.vdot(s.amps, s.amps).real == pytest.approx(1.0, abs=1e-12)


@seed(7)
@settings(max_examples=50, deadline=None)
@given(phi=st.floats(-10, 10), chi=st.floats(-10, 10))
def test_rotations_compose(phi, chi):
    """R_y(phi) R_y(chi) = R_y(phi + chi) for all angles."""
    assert (rotation_y(phi) @ rotation_y(chi)).allclose(rotation_y(phi + chi), atol=1e-12)
