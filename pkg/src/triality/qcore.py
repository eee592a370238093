"""Exact linear algebra for three-qubit pure states.

Amplitudes are stored in lexicographic order, ``index = 4*q_A + 2*q_B + q_C``.
Single-qubit matrices are plain ``(2, 2)`` complex numpy arrays with entry
``[0, 0]`` the ``|0><0|`` population.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

ATOL_EXACT = 1e-12
ATOL_GATE = 1e-9
ATOL_VALIDATE = 1e-6

# Letter names of the eight amplitudes, keyed by their basis ket.
SYMBOL_INDEX = {
    "a": 0b000,
    "b": 0b001,
    "c": 0b010,
    "g": 0b011,
    "d": 0b100,
    "f": 0b101,
    "e": 0b110,
    "h": 0b111,
}


class InvalidStateError(ValueError):
    pass


class InvalidDensityMatrixError(ValueError):
    pass


class QubitLabel(enum.IntEnum):
    A = 0
    B = 1
    C = 2


QUBITS = tuple(QubitLabel)


@dataclass(frozen=True)
class PureState3:
    """Normalized three-qubit pure state.

    The amplitude array is copied and made read-only on construction.
    """

    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (8,):
            raise InvalidStateError(f"expected 8 amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise InvalidStateError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_symbols(cls, **symbols: complex) -> PureState3:
        """Build a state from the letter names ``a`` ... ``h``; missing ones are 0."""
        unknown = set(symbols) - set(SYMBOL_INDEX)
        if unknown:
            raise InvalidStateError(f"unknown amplitude symbols: {sorted(unknown)}")
        amps = np.zeros(8, dtype=complex)
        for name, value in symbols.items():
            amps[SYMBOL_INDEX[name]] = value
        return cls(amps)

    @classmethod
    def basis(cls, label: str) -> PureState3:
        """Computational basis state from a bit string such as ``"101"``."""
        if len(label) != 3 or set(label) - {"0", "1"}:
            raise InvalidStateError(f"bad basis label {label!r}")
        amps = np.zeros(8, dtype=complex)
        amps[int(label, 2)] = 1.0
        return cls(amps)

    def symbol(self, name: str) -> complex:
        return complex(self.amplitudes[SYMBOL_INDEX[name]])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        """Amplitudes as a ``(2, 2, 2)`` array indexed ``[q_A, q_B, q_C]``."""
        return self.amplitudes.reshape(2, 2, 2)

    def allclose(self, other: PureState3, atol: float = ATOL_EXACT) -> bool:
        return bool(np.allclose(self.amplitudes, other.amplitudes, rtol=0, atol=atol))


def random_pure_state(rng: np.random.Generator) -> PureState3:
    """Haar-random state: 16 standard normals as 8 complex amplitudes, normalized."""
    z = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    return PureState3(z / np.linalg.norm(z))


def density_matrix(rho11, rho12, rho22) -> np.ndarray:
    """Hermitian 2x2 matrix from its upper triangle."""
    return np.array([[rho11, rho12], [np.conj(rho12), rho22]], dtype=complex)


def as_matrix2(rho) -> np.ndarray:
    m = np.asarray(rho, dtype=complex)
    if m.shape != (2, 2):
        raise InvalidDensityMatrixError(f"expected a 2x2 matrix, got shape {m.shape}")
    return m


def reduced_density_matrix(state: PureState3, k: QubitLabel) -> np.ndarray:
    """Single-qubit state of qubit ``k`` with the other two traced out.

    Computed as ``M @ M^dagger`` where ``M`` is the amplitude tensor with
    qubit ``k`` on the row axis, so ``rho[i, j] = sum_r psi[i, r] psi[j, r]*``.
    For qubit A the off-diagonal entry is ``a d* + b f* + c e* + g h*``.
    """
    deviation = abs(state.norm - 1.0)
    if deviation > ATOL_GATE:
        raise InvalidStateError(f"state is not normalized (|norm - 1| = {deviation:.3e})")
    m = np.moveaxis(state.tensor(), int(k), 0).reshape(2, 4)
    rho = m @ m.conj().T
    # exact Hermiticity; the diagonal is real by construction
    rho[1, 0] = np.conj(rho[0, 1])
    rho[0, 0] = rho[0, 0].real
    rho[1, 1] = rho[1, 1].real
    return rho


def reduced_density_matrices(state: PureState3) -> dict[QubitLabel, np.ndarray]:
    return {k: reduced_density_matrix(state, k) for k in QUBITS}


def hermiticity_deviation(rho) -> float:
    m = as_matrix2(rho)
    return float(np.max(np.abs(m - m.conj().T)))


def purity(rho) -> float:
    """Tr(rho^2) of a Hermitian 2x2 matrix."""
    m = as_matrix2(rho)
    asym = hermiticity_deviation(m)
    if asym > ATOL_GATE:
        raise InvalidDensityMatrixError(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    return float(np.real(np.trace(m @ m)))


def eigenvalues_2x2(rho) -> tuple[float, float]:
    """Closed-form eigenvalues (ascending) of a Hermitian 2x2 matrix."""
    m = as_matrix2(rho)
    half_trace = 0.5 * (m[0, 0].real + m[1, 1].real)
    half_gap = 0.5 * (m[0, 0].real - m[1, 1].real)
    radius = float(np.hypot(half_gap, abs(m[0, 1])))
    return half_trace - radius, half_trace + radius


@dataclass(frozen=True)
class ValidationResult:
    trace_deviation: float
    hermiticity_deviation: float
    eigenvalues: tuple[float, float]
    tol: float
    eigen_tol: float

    @property
    def trace_one(self) -> bool:
        return self.trace_deviation <= self.tol

    @property
    def hermitian(self) -> bool:
        return self.hermiticity_deviation <= self.tol

    @property
    def eigenvalues_in_unit_interval(self) -> bool:
        lo, hi = self.eigenvalues
        return lo >= -self.eigen_tol and hi <= 1.0 + self.eigen_tol

    @property
    def ok(self) -> bool:
        return self.trace_one and self.hermitian and self.eigenvalues_in_unit_interval

    def describe(self) -> str:
        checks = [
            ("trace-one", self.trace_one, f"|Tr-1|={self.trace_deviation:.3e}"),
            ("hermitian", self.hermitian, f"max|rho-rho^+|={self.hermiticity_deviation:.3e}"),
            (
                "eigenvalues",
                self.eigenvalues_in_unit_interval,
                f"({self.eigenvalues[0]:.6f}, {self.eigenvalues[1]:.6f})",
            ),
        ]
        return "; ".join(f"{name} {'ok' if good else 'FAIL'} {detail}" for name, good, detail in checks)


def validate_density_matrix(rho, tol: float = ATOL_VALIDATE, eigen_tol: float | None = None) -> ValidationResult:
    """Check trace one, Hermiticity and eigenvalues in [0, 1].

    ``eigen_tol`` defaults to ``tol``; pass a looser value to accept the
    slightly non-physical output of linear-inversion tomography.
    """
    m = as_matrix2(rho)
    return ValidationResult(
        trace_deviation=float(abs(np.trace(m) - 1.0)),
        hermiticity_deviation=hermiticity_deviation(m),
        eigenvalues=eigenvalues_2x2(m),
        tol=tol,
        eigen_tol=tol if eigen_tol is None else eigen_tol,
    )


def require_density_matrix(rho, tol: float = ATOL_VALIDATE, eigen_tol: float | None = None) -> np.ndarray:
    """Return ``rho`` as an array or raise :class:`InvalidDensityMatrixError`."""
    m = as_matrix2(rho)
    result = validate_density_matrix(m, tol=tol, eigen_tol=eigen_tol)
    if not result.ok:
        raise InvalidDensityMatrixError(f"invalid density matrix: {result.describe()}")
    return m
