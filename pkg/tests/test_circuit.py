import math

import numpy as np
import pytest

from oracles import cnot_matrix, haar_amplitudes, kron_gate
from triality.circuit import (
    CNOT,
    Ry,
    apply_gate,
    prepare_theta_state,
    ry_matrix,
    run_circuit,
    theta_circuit,
    theta_state_formula,
)
from triality.qcore import InvalidStateError, PureState3, QubitLabel

A, B, C = QubitLabel


def test_ry_pi_on_a_gives_100():
    out = apply_gate(PureState3.basis("000"), Ry(A, math.pi))
    np.testing.assert_allclose(out.amplitudes, np.eye(8)[4], atol=1e-15)
    assert out.amplitudes[4].real == pytest.approx(1.0)


def test_cnot_flips_target_when_control_set():
    out = apply_gate(PureState3.basis("100"), CNOT(A, B))
    np.testing.assert_array_equal(out.amplitudes, np.eye(8)[6])


def test_cnot_idle_when_control_clear():
    out = apply_gate(PureState3.basis("011"), CNOT(A, C))
    np.testing.assert_array_equal(out.amplitudes, np.eye(8)[3])


def test_ry_half_pi_on_c():
    out = apply_gate(PureState3.basis("000"), Ry(C, math.pi / 2))
    expected = np.zeros(8)
    expected[:2] = 1 / math.sqrt(2)
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-15)


def test_cnot_requires_distinct_qubits():
    with pytest.raises(ValueError):
        CNOT(B, B)


def test_ry_rejects_nonfinite_angle():
    with pytest.raises(ValueError):
        Ry(A, math.inf)


def test_rejects_unnormalized_input():
    with pytest.raises(InvalidStateError):
        apply_gate(PureState3(np.ones(8)), Ry(A, 0.3))


def test_gates_match_8x8_matrices_and_preserve_norm(rng):
    for psi in haar_amplitudes(rng, 200):
        s = PureState3(psi)
        theta = rng.uniform(-10, 10)
        k = QubitLabel(rng.integers(3))
        out = apply_gate(s, Ry(k, theta))
        np.testing.assert_allclose(out.amplitudes, kron_gate(ry_matrix(theta), int(k)) @ psi, atol=1e-12)
        assert out.norm == pytest.approx(1.0, abs=1e-12)
        ctrl, tgt = rng.choice(3, size=2, replace=False)
        out = apply_gate(s, CNOT(QubitLabel(ctrl), QubitLabel(tgt)))
        np.testing.assert_allclose(out.amplitudes, cnot_matrix(ctrl, tgt) @ psi, atol=1e-15)
        assert out.norm == pytest.approx(1.0, abs=1e-12)


def test_circuit_layout():
    gates = theta_circuit(0.1, 0.2, 0.3)
    assert gates == (Ry(A, 0.1), Ry(B, 0.2), Ry(C, 0.3), CNOT(A, B), CNOT(A, C))


class TestPrepareThetaState:
    def test_zero_angles(self):
        np.testing.assert_allclose(prepare_theta_state(0, 0, 0).amplitudes, np.eye(8)[0], atol=0)

    def test_ghz(self):
        out = prepare_theta_state(math.pi / 2, 0, 0)
        expected = np.zeros(8)
        expected[[0, 7]] = 1 / math.sqrt(2)
        np.testing.assert_allclose(out.amplitudes, expected, atol=1e-15)

    def test_reference_angles_first_amplitude(self):
        out = prepare_theta_state(math.pi / 4, math.pi / 6, math.pi / 8)
        # cos(pi/8) cos(pi/12) cos(pi/16)
        assert out.amplitudes[0].real == pytest.approx(0.8752519023416166, abs=1e-12)

    def test_matches_formula_on_random_angles(self, rng):
        for t in rng.uniform(-2 * math.pi, 2 * math.pi, size=(1000, 3)):
            assert prepare_theta_state(*t).allclose(theta_state_formula(*t), atol=1e-12)

    def test_formula_matches_explicit_matrix_product(self, rng):
        for t in rng.uniform(0, math.pi, size=(50, 3)):
            psi = np.eye(8)[0].astype(complex)
            for k in range(3):
                psi = kron_gate(ry_matrix(t[k]), k) @ psi
            psi = cnot_matrix(0, 2) @ cnot_matrix(0, 1) @ psi
            np.testing.assert_allclose(theta_state_formula(*t).amplitudes, psi, atol=1e-12)

    def test_other_cnot_layouts_do_not_match(self):
        t = (0.7, 1.1, 1.9)
        formula = theta_state_formula(*t)
        for layout in ((CNOT(B, A), CNOT(C, A)), (CNOT(A, B), CNOT(B, C)), (CNOT(A, C), CNOT(C, B))):
            state = run_circuit((Ry(A, t[0]), Ry(B, t[1]), Ry(C, t[2]), *layout))
            assert not state.allclose(formula, atol=1e-6)

    def test_4pi_periodicity(self, rng):
        for t in rng.uniform(0, 2 * math.pi, size=(100, 3)):
            assert prepare_theta_state(t[0] + 4 * math.pi, t[1], t[2]).allclose(prepare_theta_state(*t), atol=1e-12)
