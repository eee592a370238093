"""Exit criteria. Each test logs one PASS/FAIL line, collected in the terminal summary."""

import math
import subprocess
import sys
import time

import numpy as np

from oracles import brute_force_partial_trace, haar_amplitudes
from triality.circuit import prepare_theta_state, theta_state_formula
from triality.duality import triality_report
from triality.harness import ExperimentConfig, Mode, run_sweep
from triality.qcore import PureState3, QubitLabel, reduced_density_matrices, reduced_density_matrix
from triality.reference import (
    HARDWARE_COUNTS,
    HARDWARE_METRICS,
    HARDWARE_RHOS,
    HARDWARE_TRIALITY_SUM,
    SWEEP_THETAS,
)
from triality.tomography import reconstruct, stokes_from_counts, tomograph_qubit


def test_ac1_counts_to_matrices(acceptance_log):
    start = time.perf_counter()
    worst = 0.0
    for k in QubitLabel:
        rho = reconstruct(stokes_from_counts(HARDWARE_COUNTS[k]))
        worst = max(worst, float(np.max(np.abs(np.round(rho, 4) - HARDWARE_RHOS[k]))))
    elapsed = time.perf_counter() - start
    ok = worst < 5e-5
    acceptance_log("AC1 hardware counts -> reconstructed matrices", ok, f"max |delta| = {worst:.1e} ({elapsed * 1e3:.1f} ms)")
    assert ok


def test_ac2_metrics_regression(acceptance_log):
    report = triality_report(HARDWARE_RHOS)
    row = report.table_row()
    vp_err = max(abs(round(row[n], 4) - HARDWARE_METRICS[n]) for n in row if n != "Q")
    q_err = abs(row["Q"] - HARDWARE_METRICS["Q"])
    sum_err = abs(report.triality_sum - HARDWARE_TRIALITY_SUM)
    ok = vp_err < 5e-5 and q_err <= 5e-4 and sum_err <= 5e-4
    acceptance_log(
        "AC2 V/P/Q/sum regression",
        ok,
        f"V,P max |delta| = {vp_err:.1e}; Q = {row['Q']:.5f} (|delta| {q_err:.1e}); "
        f"sum = {report.triality_sum:.5f} (|delta| {sum_err:.1e})",
    )
    assert ok


def test_ac3_triality_identity(acceptance_log):
    rng = np.random.default_rng(3)
    start = time.perf_counter()
    worst, max_vp = 0.0, 0.0
    for psi in haar_amplitudes(rng, 10_000):
        r = triality_report(reduced_density_matrices(PureState3(psi)))
        worst = max(worst, abs(r.triality_sum - 1.0))
        max_vp = max(max_vp, r.sum_v2_p2)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and max_vp <= 3 + 1e-9 and elapsed < 5
    acceptance_log(
        "AC3 triality identity, 10^4 Haar states",
        ok,
        f"max |sum - 1| = {worst:.1e}; max sum(V^2+P^2) = {max_vp:.6f}; {elapsed:.2f} s",
    )
    assert ok


def test_ac4_partial_trace_oracle(acceptance_log):
    rng = np.random.default_rng(4)
    start = time.perf_counter()
    worst = 0.0
    for psi in haar_amplitudes(rng, 1000):
        state = PureState3(psi)
        for k in QubitLabel:
            diff = reduced_density_matrix(state, k) - brute_force_partial_trace(psi, int(k))
            worst = max(worst, float(np.max(np.abs(diff))))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 5
    acceptance_log("AC4 closed-form vs 8x8 partial trace, 10^3 states", ok, f"max |delta| = {worst:.1e}; {elapsed:.2f} s")
    assert ok


def test_ac5_circuit_formula(acceptance_log):
    rng = np.random.default_rng(5)
    start = time.perf_counter()
    worst = 0.0
    for t in rng.uniform(-2 * math.pi, 2 * math.pi, size=(1000, 3)):
        diff = prepare_theta_state(*t).amplitudes - theta_state_formula(*t).amplitudes
        worst = max(worst, float(np.max(np.abs(diff))))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 5
    acceptance_log("AC5 circuit vs amplitude formula, 10^3 angle triples", ok, f"max |delta| = {worst:.1e}; {elapsed:.2f} s")
    assert ok


def test_ac6_sweep_reproduction(acceptance_log):
    start = time.perf_counter()
    term_err, sums = 0.0, []
    for mode in (Mode.SWEEP_CASE1, Mode.SWEEP_CASE2):
        records = run_sweep(ExperimentConfig(mode=mode, shots=10000, seed=2024, sweep_points=SWEEP_THETAS))
        for rec in records:
            v, p, q, total = rec.terms
            term_err = max(term_err, *(abs(a - b) for a, b in zip((v, p, q), rec.analytic)))
            sums.append(total)
    elapsed = time.perf_counter() - start
    ok = term_err <= 0.02 and all(0.995 <= s <= 1.005 for s in sums) and elapsed < 10
    acceptance_log(
        "AC6 ideal sweeps vs analytic curves",
        ok,
        f"max term |delta| = {term_err:.4f}; sums in [{min(sums):.6f}, {max(sums):.6f}]; {elapsed:.2f} s",
    )
    assert ok


def test_ac7_shot_noise_convergence(acceptance_log):
    state = prepare_theta_state(math.pi / 4, math.pi / 6, math.pi / 8)
    exact = reduced_density_matrix(state, QubitLabel.A)
    shot_grid = (10**2, 10**4, 10**6)
    start = time.perf_counter()
    mean_errors = []
    for shots in shot_grid:
        errs = []
        for seed in range(50):
            _, rho = tomograph_qubit(state, QubitLabel.A, shots, seed=seed)
            errs.append(np.linalg.norm(rho - exact))
        mean_errors.append(float(np.mean(errs)))
    slope = float(np.polyfit(np.log10(shot_grid), np.log10(mean_errors), 1)[0])
    elapsed = time.perf_counter() - start
    ok = abs(slope + 0.5) <= 0.15 and elapsed < 30
    acceptance_log(
        "AC7 O(1/sqrt(shots)) convergence",
        ok,
        f"mean Frobenius errors {', '.join(f'{e:.2e}' for e in mean_errors)}; slope = {slope:.3f}; {elapsed:.2f} s",
    )
    assert ok


def test_ac8_cli_determinism(acceptance_log):
    cmd = [sys.executable, "-m", "triality", "sweep", "--case", "1", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = first == second and len(first) > 0
    acceptance_log("AC8 sweep --case 1 --seed 42 byte-identical", ok, f"{len(first)} bytes, identical = {first == second}")
    assert ok
