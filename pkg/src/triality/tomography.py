"""Single-qubit tomography with simulated shot counts and linear inversion.

Each qubit is measured with four projectors: the identity, ``|0><0|``,
``|-><-|`` and ``|R><R|`` with ``|R> = (|0> - i|1>)/sqrt(2)``. Counts are
turned into Stokes parameters ``S0 = 2 n0``, ``Si = 2 (ni - n0)`` and the
state is rebuilt as ``rho11 = (S0 + S1) / 2S0``,
``rho12 = (-S2 + i S3) / 2S0``.

Randomness comes from numpy's PCG64 bit generator. An integer seed is
expanded with :class:`numpy.random.SeedSequence` into one independent
stream per operator, so counts depend only on (rho, shots, noise, seed).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .qcore import PureState3, QubitLabel, density_matrix, reduced_density_matrix, require_density_matrix

_SQRT1_2 = 1 / math.sqrt(2)
_KET_MINUS = np.array([_SQRT1_2, -_SQRT1_2], dtype=complex)
_KET_R = np.array([_SQRT1_2, -1j * _SQRT1_2], dtype=complex)


class MeasurementOperator(enum.IntEnum):
    MU0 = 0
    MU1 = 1
    MU2 = 2
    MU3 = 3

    @property
    def matrix(self) -> np.ndarray:
        return _OPERATOR_MATRICES[self].copy()


_OPERATOR_MATRICES = {
    MeasurementOperator.MU0: np.eye(2, dtype=complex),
    MeasurementOperator.MU1: np.array([[1, 0], [0, 0]], dtype=complex),
    MeasurementOperator.MU2: np.outer(_KET_MINUS, _KET_MINUS.conj()),
    MeasurementOperator.MU3: np.outer(_KET_R, _KET_R.conj()),
}

SAMPLED_OPERATORS = (MeasurementOperator.MU1, MeasurementOperator.MU2, MeasurementOperator.MU3)


@dataclass(frozen=True)
class TomographyCounts:
    n0: int
    n1: int
    n2: int
    n3: int
    shots: int

    def __post_init__(self):
        if self.shots <= 0:
            raise ValueError(f"shots must be positive, got {self.shots}")
        for name in ("n0", "n1", "n2", "n3"):
            n = getattr(self, name)
            if n < 0 or n > self.shots:
                raise ValueError(f"{name}={n} outside [0, {self.shots}]")

    @classmethod
    def from_table(cls, n0: int, n1: int, n2: int, n3: int) -> TomographyCounts:
        """Counts as printed in a table, where ``n0`` is half the shot budget."""
        return cls(n0, n1, n2, n3, shots=2 * n0)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.n3)


@dataclass(frozen=True)
class StokesVector:
    s0: float
    s1: float
    s2: float
    s3: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.s0, self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class NoiseConfig:
    readout_flip_probability: float = 0.0
    depolarizing_probability: float = 0.0

    def __post_init__(self):
        for name in ("readout_flip_probability", "depolarizing_probability"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")

    @property
    def is_ideal(self) -> bool:
        return self.readout_flip_probability == 0.0 and self.depolarizing_probability == 0.0


IDEAL = NoiseConfig()


def outcome_probability(rho, op: MeasurementOperator) -> float:
    """Tr(mu rho), clipped into [0, 1] to absorb rounding."""
    m = require_density_matrix(rho)
    if op is MeasurementOperator.MU0:
        return 1.0
    p = float(np.real(np.trace(_OPERATOR_MATRICES[op] @ m)))
    return min(1.0, max(0.0, p))


def depolarize(rho, p: float) -> np.ndarray:
    return (1.0 - p) * np.asarray(rho, dtype=complex) + p * 0.5 * np.eye(2)


def operator_seed_sequence(seed: int, op: MeasurementOperator) -> np.random.SeedSequence:
    return np.random.SeedSequence(seed, spawn_key=(int(op),))


def simulate_counts(rho, shots: int, noise: NoiseConfig = IDEAL, seed: int = 0) -> TomographyCounts:
    """Draw independent binomial counts for mu1..mu3; n0 is fixed at shots/2."""
    if shots <= 0 or shots % 2:
        raise ValueError(f"shots must be a positive even integer, got {shots}")
    m = require_density_matrix(rho)
    if noise.depolarizing_probability:
        m = depolarize(m, noise.depolarizing_probability)
    pf = noise.readout_flip_probability
    counts = []
    for op in SAMPLED_OPERATORS:
        q = outcome_probability(m, op)
        q = (1.0 - pf) * q + pf * (1.0 - q)
        rng = np.random.Generator(np.random.PCG64(operator_seed_sequence(seed, op)))
        counts.append(int(rng.binomial(shots, q)))
    return TomographyCounts(shots // 2, *counts, shots=shots)


def stokes_from_counts(counts: TomographyCounts) -> StokesVector:
    n0, n1, n2, n3 = counts.as_tuple()
    return StokesVector(float(2 * n0), float(2 * (n1 - n0)), float(2 * (n2 - n0)), float(2 * (n3 - n0)))


def reconstruct(stokes: StokesVector) -> np.ndarray:
    """Linear-inversion estimate; exactly Hermitian with trace exactly one.

    No projection onto physical states is applied, so shot noise can push an
    eigenvalue slightly outside [0, 1].
    """
    s0, s1, s2, s3 = stokes.as_tuple()
    if not s0 > 0:
        raise ValueError(f"S0 must be positive, got {s0}")
    rho11 = (s0 + s1) / (2 * s0)
    rho12 = complex(-s2 / (2 * s0), s3 / (2 * s0))
    return density_matrix(rho11, rho12, 1.0 - rho11)


def pauli_expansion(stokes: StokesVector) -> dict[str, float]:
    """Bloch components (x, y, z) implied by the Stokes parameters."""
    s0, s1, s2, s3 = stokes.as_tuple()
    return {"x": -s2 / s0, "y": -s3 / s0, "z": s1 / s0}


def tomograph_qubit(
    state: PureState3,
    k: QubitLabel,
    shots: int,
    noise: NoiseConfig = IDEAL,
    seed: int = 0,
) -> tuple[TomographyCounts, np.ndarray]:
    rho = reduced_density_matrix(state, k)
    counts = simulate_counts(rho, shots, noise, seed)
    return counts, reconstruct(stokes_from_counts(counts))
