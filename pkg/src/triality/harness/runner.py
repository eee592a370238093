"""Tomography-to-metrics pipeline for single settings and angle sweeps.

Seeds: the count stream for (qubit k, repetition r) is seeded with
``derive_seed(master, k, r)``, a 64-bit word drawn from
``SeedSequence(master, spawn_key=(k, r))``. Inside ``simulate_counts`` that
word is expanded once more per operator, so every (master, qubit, operator,
repetition) tuple owns an independent stream. Sweep point ``i`` (in sorted
angle order) runs with master seed ``point_seed(master, i)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

from ..circuit import prepare_theta_state
from ..duality import ANALYTIC_SWEEPS, TrialityReport, triality_report
from ..qcore import QUBITS, QubitLabel, reduced_density_matrices
from ..reference import HARDWARE_COUNTS
from ..tomography import TomographyCounts, reconstruct, stokes_from_counts, tomograph_qubit
from .config import ConfigError, ExperimentConfig, Mode

# Keeps sweep-point seeds apart from the (qubit, repetition) keys.
_SWEEP_DOMAIN = 0x5EE9


def derive_seed(master: int, qubit: QubitLabel, repetition: int) -> int:
    ss = np.random.SeedSequence(master, spawn_key=(int(qubit), repetition))
    return int(ss.generate_state(1, np.uint64)[0])


def point_seed(master: int, index: int) -> int:
    ss = np.random.SeedSequence(master, spawn_key=(_SWEEP_DOMAIN, index))
    return int(ss.generate_state(1, np.uint64)[0])


def average_counts(runs: list[TomographyCounts]) -> TomographyCounts:
    """Per-operator mean over repetitions, rounded half up to an integer."""
    shots = runs[0].shots
    if any(c.shots != shots for c in runs):
        raise ValueError("cannot average counts with different shot budgets")
    reps = len(runs)
    totals = np.sum([c.as_tuple() for c in runs], axis=0)
    n0, n1, n2, n3 = ((2 * int(t) + reps) // (2 * reps) for t in totals)
    return TomographyCounts(n0, n1, n2, n3, shots=shots)


@dataclass(frozen=True)
class ExperimentRecord:
    config: ExperimentConfig
    per_qubit_counts: Mapping[QubitLabel, TomographyCounts]
    reconstructed: Mapping[QubitLabel, np.ndarray]
    report: TrialityReport | None
    exact_report: TrialityReport
    repetition_counts: tuple[Mapping[QubitLabel, TomographyCounts], ...] = ()
    repetition_reports: tuple[TrialityReport, ...] = ()
    theta: float | None = None
    sweep_case: int | None = None
    analytic: tuple[float, float, float] | None = None
    exact_rhos: Mapping[QubitLabel, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def terms(self) -> tuple[float, float, float, float] | None:
        """(mean V^2, mean P^2, Q, sum) of the simulated report."""
        if self.report is None:
            return None
        r = self.report
        return r.mean_v_squared, r.mean_p_squared, r.q_global, r.triality_sum

    def repetition_spread(self) -> dict[str, float]:
        """Sample standard deviation of each term across repetitions."""
        if len(self.repetition_reports) < 2:
            return {}
        values = np.array(
            [(r.mean_v_squared, r.mean_p_squared, r.q_global, r.triality_sum) for r in self.repetition_reports]
        )
        return dict(zip(("v_term", "p_term", "q", "sum"), values.std(axis=0, ddof=1).tolist()))


def run_single(config: ExperimentConfig) -> ExperimentRecord:
    if config.mode not in (Mode.SINGLE, Mode.EXACT):
        raise ConfigError("mode", f"run_single needs mode single or exact, got {config.mode.value}")
    state = prepare_theta_state(*config.thetas)
    exact_rhos = reduced_density_matrices(state)
    exact_report = triality_report(exact_rhos, strict=True)
    if config.mode is Mode.EXACT:
        return ExperimentRecord(
            config=config,
            per_qubit_counts={},
            reconstructed={},
            report=None,
            exact_report=exact_report,
            exact_rhos=exact_rhos,
        )

    rep_counts = []
    rep_reports = []
    for rep in range(config.repetitions):
        counts, rhos = {}, {}
        for k in QUBITS:
            seed = derive_seed(config.seed, k, rep)
            counts[k], rhos[k] = tomograph_qubit(state, k, config.shots, config.noise, seed)
        rep_counts.append(counts)
        rep_reports.append(triality_report(rhos))

    averaged = {k: average_counts([c[k] for c in rep_counts]) for k in QUBITS}
    reconstructed = {k: reconstruct(stokes_from_counts(averaged[k])) for k in QUBITS}
    return ExperimentRecord(
        config=config,
        per_qubit_counts=averaged,
        reconstructed=reconstructed,
        report=triality_report(reconstructed),
        exact_report=exact_report,
        repetition_counts=tuple(rep_counts),
        repetition_reports=tuple(rep_reports),
        exact_rhos=exact_rhos,
    )


def sweep_thetas(case: int, theta: float) -> tuple[float, float, float]:
    if case == 1:
        return (theta, theta, theta)
    if case == 2:
        return (theta, 0.0, 0.0)
    raise ConfigError("case", f"sweep case must be 1 or 2, got {case}")


def run_sweep(config: ExperimentConfig) -> list[ExperimentRecord]:
    case = config.mode.sweep_case
    if case is None:
        raise ConfigError("mode", f"run_sweep needs a sweep mode, got {config.mode.value}")
    oracle = ANALYTIC_SWEEPS[case]
    records = []
    for i, theta in enumerate(sorted(config.sweep_points)):
        point = config.with_thetas(*sweep_thetas(case, theta), mode=Mode.SINGLE, seed=point_seed(config.seed, i))
        records.append(replace(run_single(point), theta=theta, sweep_case=case, analytic=oracle(theta)))
    return records


def theory_grid(case: int, resolution: int, lo: float = 0.0, hi: float = math.pi) -> list[tuple[float, ...]]:
    """Dense (theta, v_term, p_term, q) samples of the analytic curves."""
    if resolution < 1:
        raise ConfigError("resolution", f"must be a positive integer, got {resolution}")
    oracle = ANALYTIC_SWEEPS[case]
    thetas = [lo] if resolution == 1 else np.linspace(lo, hi, resolution).tolist()
    return [(t, *oracle(t)) for t in thetas]


def replay_hardware_counts() -> tuple[dict[QubitLabel, np.ndarray], TrialityReport]:
    """Reconstruct the published hardware counts and score them."""
    rhos = {k: reconstruct(stokes_from_counts(c)) for k, c in HARDWARE_COUNTS.items()}
    return rhos, triality_report(rhos)
