"""Tests for relative-parameter states, invariants and extraction."""

import math

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from conftest import SINGLET
from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.common.types import RelativeParams
from relational_qubit_comm.relative import (
    InvariantPair,
    concurrence,
    extract,
    invariants_of,
    orbit_equal,
    phase_fixed,
    prepare_canonical,
    prepare_via_circuit,
    reduced_density,
    schmidt_form,
)
from relational_qubit_comm.su2 import (
    RandomStream,
    StateVector2Q,
    apply,
    collective,
    equal_up_to_phase,
    haar_state,
    haar_su2,
)


def rotated(s: StateVector2Q, stream: RandomStream, phase: float = 0.0) -> StateVector2Q:
    return apply(collective(haar_su2(stream)), s).with_phase(phase)


class TestRelativeParams:
    """Test parameter validation."""

    def test_ranges(self):
        """Test each parameter is checked against its range."""
        with pytest.raises(InvalidInputError):
            RelativeParams.of(0.9, 1.0, 0.0)
        with pytest.raises(InvalidInputError):
            RelativeParams.of(0.1, 3.2, 0.0)
        with pytest.raises(InvalidInputError):
            RelativeParams.of(0.1, 1.0, 3.5)

    def test_negative_psi_allowed(self):
        """Test the mirrored half of the phase range is accepted."""
        assert RelativeParams.of(0.3, 1.0, -2.0).psi == -2.0

    def test_non_finite_rejected(self):
        """Test NaN is rejected."""
        with pytest.raises(InvalidInputError):
            RelativeParams.of(float("nan"), 1.0, 0.0)

    def test_replace(self):
        """Test replace returns a validated copy."""
        p = RelativeParams.of(0.3, 1.0, 0.5)
        assert p.replace(theta=2.0).as_tuple() == (0.3, 2.0, 0.5)
        with pytest.raises(InvalidInputError):
            p.replace(alpha=1.0)


class TestPreparation:
    """Test canonical and circuit preparation."""

    def test_singlet(self):
        """Test (pi/4, pi, 0) is the singlet."""
        s = prepare_canonical(RelativeParams.of(math.pi / 4, math.pi, 0.0))
        np.testing.assert_allclose(s.amps, SINGLET, atol=1e-15)

    def test_product_state(self):
        """Test alpha = 0 gives |0>|n>."""
        s = prepare_canonical(RelativeParams.of(0.0, math.pi / 2, 0.0))
        np.testing.assert_allclose(s.amps, [1 / math.sqrt(2), 1 / math.sqrt(2), 0, 0], atol=1e-15)

    def test_theta_zero(self):
        """Test theta = 0 gives cos a e^{-i psi/2}|00> + sin a e^{i psi/2}|11>."""
        alpha, psi = 0.4, 1.0
        s = prepare_canonical(RelativeParams.of(alpha, 0.0, psi))
        expected = [
            np.exp(-0.5j * psi) * math.cos(alpha),
            0,
            0,
            np.exp(0.5j * psi) * math.sin(alpha),
        ]
        np.testing.assert_allclose(s.amps, expected, atol=1e-15)

    def test_circuit_matches_canonical_on_grid(self):
        """Test the gate circuit prepares the canonical state up to phase."""
        for alpha in np.linspace(0, math.pi / 4, 20):
            for theta in np.linspace(0, math.pi, 20):
                for psi in np.linspace(0, math.pi, 20):
                    p = RelativeParams.of(float(alpha), float(theta), float(psi))
                    assert equal_up_to_phase(prepare_via_circuit(p), prepare_canonical(p), 1e-12)


class TestInvariants:
    """Test the collective-rotation invariants."""

    def test_values_for_canonical_state(self, generic_params):
        """Test det = sin(2a)/2 and the closed form of the cross invariant."""
        alpha, theta, psi = generic_params.as_tuple()
        inv = invariants_of(prepare_canonical(generic_params))
        assert inv.det_inv == pytest.approx(math.sin(2 * alpha) / 2, abs=1e-15)
        c, s = math.cos(alpha), math.sin(alpha)
        beta = math.sin(theta / 2) * (
            (c + s) * math.cos(psi / 2) - 1j * (c - s) * math.sin(psi / 2)
        )
        assert inv.cross_inv == pytest.approx(beta, abs=1e-15)

    def test_concurrence(self):
        """Test concurrence equals sin(2 alpha)."""
        for alpha in (0.0, 0.2, 0.5, math.pi / 4):
            s = prepare_canonical(RelativeParams.of(alpha, 1.0, 0.3))
            assert concurrence(s) == pytest.approx(math.sin(2 * alpha), abs=1e-12)

    def test_bounds_enforced(self):
        """Test invariants outside their reachable range are rejected."""
        with pytest.raises(InvalidInputError):
            InvariantPair(0.6 + 0j, 0j)
        with pytest.raises(InvalidInputError):
            InvariantPair(0j, 1.5 + 0j)

    def test_phase_fixed_makes_det_real(self):
        """Test phase fixing turns det real and non-negative."""
        s = prepare_canonical(RelativeParams.of(0.3, 1.0, 0.5)).with_phase(0.8)
        fixed = invariants_of(s).phase_fixed()
        assert fixed.det_inv.imag == pytest.approx(0.0, abs=1e-15)
        assert fixed.det_inv.real > 0

    def test_phase_fixed_state(self, stream):
        """Test the rephased state has real non-negative det and stays on its orbit."""
        s = rotated(prepare_canonical(RelativeParams.of(0.3, 1.0, 0.5)), stream, phase=1.3)
        fixed = phase_fixed(s)
        det = invariants_of(fixed).det_inv
        assert det.imag == pytest.approx(0.0, abs=1e-15)
        assert det.real == pytest.approx(math.sin(0.6) / 2, abs=1e-12)
        assert equal_up_to_phase(s, fixed, 1e-12)

    def test_phase_fixed_product_state_unchanged(self):
        """Test a product state is returned as is."""
        s = StateVector2Q.basis("01")
        assert phase_fixed(s) is s

    @pytest.mark.slow
    def test_frame_invariance_under_random_rotations(self, stream):
        """Test invariants and extracted parameters survive 1000 collective rotations."""
        s = prepare_canonical(RelativeParams.of(0.35, 1.3, 0.9))
        base = invariants_of(s)
        expected = extract(s).params
        for _ in range(1000):
            r = rotated(s, stream)
            inv = invariants_of(r)
            assert abs(inv.det_inv - base.det_inv) <= 1e-9
            assert abs(inv.cross_inv - base.cross_inv) <= 1e-9
            got = extract(r).params
            np.testing.assert_allclose(got.as_tuple(), expected.as_tuple(), atol=1e-9)


class TestOrbitEqual:
    """Test orbit comparison."""

    def test_rotation_and_phase_stay_on_orbit(self, stream):
        """Test a rotated and rephased copy is on the same orbit."""
        s = prepare_canonical(RelativeParams.of(0.3, 1.0, 0.5))
        assert orbit_equal(s, rotated(s, stream, phase=2.1), 1e-9)

    def test_mirrored_phase_is_another_orbit(self):
        """Test psi and -psi differ for partial entanglement."""
        s1 = prepare_canonical(RelativeParams.of(0.3, 1.0, 0.5))
        s2 = prepare_canonical(RelativeParams.of(0.3, 1.0, -0.5))
        assert not orbit_equal(s1, s2, 1e-9)

    def test_different_theta(self):
        """Test distinct theta values are distinct orbits."""
        s1 = prepare_canonical(RelativeParams.of(0.3, 1.0, 0.5))
        s2 = prepare_canonical(RelativeParams.of(0.3, 1.2, 0.5))
        assert not orbit_equal(s1, s2, 1e-9)

    def test_product_states_compare_cross_magnitude(self):
        """Test product states with the same inter-qubit angle share an orbit."""
        s1 = prepare_canonical(RelativeParams.of(0.0, 1.0, 0.0))
        s2 = prepare_canonical(RelativeParams.of(0.0, 1.0, 2.0))
        assert orbit_equal(s1, s2, 1e-12)

    def test_tolerance_must_be_positive(self, generic_params):
        """Test a zero tolerance is rejected."""
        s = prepare_canonical(generic_params)
        with pytest.raises(InvalidInputError):
            orbit_equal(s, s, 0.0)

    @pytest.mark.slow
    def test_round_trip_random_states(self):
        """Test extract then prepare lands on the orbit of 10^4 random states."""
        root = RandomStream(seed=1234)
        for k in range(10_000):
            s = haar_state(root.spawn(k))
            assert orbit_equal(s, prepare_canonical(extract(s).params), 1e-8)


class TestExtraction:
    """Test recovery of (alpha, theta, psi)."""

    @pytest.mark.parametrize(
        "params",
        [(0.3, 1.1, 0.7), (0.3, 1.1, -0.7), (0.6, 2.5, 3.0), (0.1, 0.4, 0.0), (0.5, 2.0, math.pi)],
    )
    def test_generic_round_trip(self, params, stream):
        """Test parameters are recovered after a rotation and phase."""
        p = RelativeParams.of(*params)
        s = rotated(prepare_canonical(p), stream, phase=0.77)
        result = extract(s)
        assert result.psi_identifiable
        assert not result.schmidt_degenerate
        np.testing.assert_allclose(result.params.as_tuple(), params, atol=1e-9)

    def test_product_state(self):
        """Test product states report psi = 0 and flag it."""
        s = prepare_canonical(RelativeParams.of(0.0, 1.3, 2.0))
        result = extract(s)
        assert not result.psi_identifiable
        np.testing.assert_allclose(result.params.as_tuple(), (0.0, 1.3, 0.0), atol=1e-12)

    def test_maximally_entangled_canonical(self):
        """Test alpha = pi/4 in the canonical frame reads off theta and psi directly."""
        p = RelativeParams.of(math.pi / 4, 1.2, 0.8)
        result = extract(prepare_canonical(p))
        assert result.schmidt_degenerate
        assert result.psi_identifiable
        np.testing.assert_allclose(result.params.as_tuple(), p.as_tuple(), atol=1e-9)

    @pytest.mark.parametrize("psi", [0.0, 1e-6, 0.8, math.pi - 1e-6, math.pi])
    def test_maximally_entangled_phase_near_edges(self, psi):
        """Test psi near 0 and pi keeps full precision at alpha = pi/4."""
        result = extract(prepare_canonical(RelativeParams.of(math.pi / 4, 2.0, psi)))
        assert result.params.theta == pytest.approx(2.0, abs=1e-12)
        assert result.params.psi == pytest.approx(psi, abs=1e-12)

    def test_maximally_entangled_rotated(self, stream):
        """Test alpha = pi/4 after a rotation lands on the same orbit with psi in [0, pi]."""
        s = rotated(prepare_canonical(RelativeParams.of(math.pi / 4, 1.2, 0.8)), stream)
        result = extract(s)
        assert result.schmidt_degenerate
        assert result.params.alpha == pytest.approx(math.pi / 4, abs=1e-12)
        assert 0.0 <= result.params.psi <= math.pi
        assert orbit_equal(s, prepare_canonical(result.params), 1e-9)

    def test_theta_zero_psi_not_identifiable(self):
        """Test the phase cannot be read when theta = 0."""
        s = prepare_canonical(RelativeParams.of(0.3, 0.0, 1.0))
        result = extract(s)
        assert not result.psi_identifiable
        assert result.params.theta == pytest.approx(0.0, abs=1e-9)
        assert result.params.alpha == pytest.approx(0.3, abs=1e-12)

    def test_singlet(self):
        """Test the singlet extracts to (pi/4, pi, 0)."""
        result = extract(StateVector2Q(SINGLET))
        np.testing.assert_allclose(result.params.as_tuple(), (math.pi / 4, math.pi, 0.0), atol=1e-9)

    def test_reduced_density_spectrum(self, generic_params):
        """Test the reduced density has eigenvalues cos^2 a and sin^2 a."""
        rho = reduced_density(prepare_canonical(generic_params))
        eig = np.sort(np.linalg.eigvalsh(rho))
        alpha = generic_params.alpha
        np.testing.assert_allclose(eig, [math.sin(alpha) ** 2, math.cos(alpha) ** 2], atol=1e-14)

    def test_schmidt_form(self, generic_params):
        """Test Schmidt coefficients and the Bloch angle between partners."""
        form = schmidt_form(prepare_canonical(generic_params))
        assert form.lambda0 == pytest.approx(math.cos(generic_params.alpha), abs=1e-12)
        assert form.lambda1 == pytest.approx(math.sin(generic_params.alpha), abs=1e-12)
        assert form.theta == pytest.approx(generic_params.theta, abs=1e-9)
        assert form.phase == pytest.approx(generic_params.psi, abs=1e-9)
        assert not form.degenerate


@seed(3)
@settings(max_examples=200, deadline=None)
@given(
    alpha=st.floats(0.05, 0.7),
    theta=st.floats(0.1, math.pi - 0.1),
    psi=st.floats(-3.0, 3.0),
    key=st.integers(0, 2**32 - 1),
)
def test_extract_inverts_prepare_in_any_frame(alpha, theta, psi, key):
    """Extraction recovers the parameters of any rotated canonical state."""
    p = RelativeParams.of(alpha, theta, psi)
    s = rotated(prepare_canonical(p), RandomStream(key), phase=0.3)
    np.testing.assert_allclose(extract(s).params.as_tuple(), p.as_tuple(), atol=1e-9)


@seed(5)
@settings(max_examples=100, deadline=None)
@given(
    alpha=st.floats(0.0, math.pi / 4),
    theta=st.floats(0.0, math.pi),
    psi=st.floats(-math.pi, math.pi),
)
def test_circuit_equivalence(alpha, theta, psi):
    """The circuit and the closed form agree up to global phase."""
    p = RelativeParams.of(alpha, theta, psi)
    assert equal_up_to_phase(prepare_via_circuit(p), prepare_canonical(p), 1e-12)
