"""Visibility, predictability, global entanglement and the triality sum.

For any Hermitian 2x2 matrix with unit trace,
``Tr(rho^2) = (1 + V^2 + P^2) / 2``, so ``Q + mean(V^2) + mean(P^2)`` is
identically one whenever the three inputs are valid single-qubit states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .qcore import ATOL_VALIDATE, QUBITS, QubitLabel, purity, require_density_matrix

# Eigenvalues of reconstructed matrices may stray this far outside [0, 1].
LENIENT_EIGEN_TOL = 0.05


def _gate(rho, strict: bool) -> np.ndarray:
    return require_density_matrix(rho, tol=ATOL_VALIDATE, eigen_tol=ATOL_VALIDATE if strict else LENIENT_EIGEN_TOL)


def _visibility(m: np.ndarray) -> float:
    return float(2.0 * abs(m[0, 1]))


def _predictability(m: np.ndarray) -> float:
    return float(abs(m[1, 1].real - m[0, 0].real))


def _purity(m: np.ndarray) -> float:
    return float(abs(m[0, 0]) ** 2 + abs(m[1, 1]) ** 2 + 2 * abs(m[0, 1]) ** 2)


def visibility(rho, strict: bool = False) -> float:
    """``2 |rho12|``."""
    return _visibility(_gate(rho, strict))


def predictability(rho, strict: bool = False) -> float:
    """``|rho22 - rho11|``."""
    return _predictability(_gate(rho, strict))


@dataclass(frozen=True)
class DualityMetrics:
    visibility: float
    predictability: float

    @classmethod
    def of(cls, rho, strict: bool = False) -> DualityMetrics:
        m = _gate(rho, strict)
        return cls(_visibility(m), _predictability(m))


def global_entanglement(rhos: Mapping[QubitLabel, np.ndarray], strict: bool = False) -> float:
    """``2 [1 - mean_k Tr(rho_k^2)]`` over all supplied single-qubit states."""
    if not rhos:
        raise ValueError("need at least one reduced density matrix")
    purities = [purity(_gate(rho, strict)) for rho in rhos.values()]
    return float(2.0 * (1.0 - sum(purities) / len(purities)))


@dataclass(frozen=True)
class TrialityReport:
    per_qubit: Mapping[QubitLabel, DualityMetrics]
    q_global: float
    mean_v_squared: float
    mean_p_squared: float

    @property
    def triality_sum(self) -> float:
        return self.q_global + self.mean_v_squared + self.mean_p_squared

    @property
    def sum_v2_p2(self) -> float:
        """Sum of V^2 + P^2 over the qubits; at most 3."""
        return 3.0 * (self.mean_v_squared + self.mean_p_squared)

    def table_row(self) -> dict[str, float]:
        row = {f"V_{k.name}": self.per_qubit[k].visibility for k in QUBITS}
        row.update({f"P_{k.name}": self.per_qubit[k].predictability for k in QUBITS})
        row["Q"] = self.q_global
        return row

    def to_dict(self) -> dict:
        return {
            "per_qubit": {
                k.name: {"visibility": m.visibility, "predictability": m.predictability}
                for k, m in self.per_qubit.items()
            },
            "q_global": self.q_global,
            "mean_v_squared": self.mean_v_squared,
            "mean_p_squared": self.mean_p_squared,
            "triality_sum": self.triality_sum,
        }


def triality_report(rhos: Mapping[QubitLabel, np.ndarray], strict: bool = False) -> TrialityReport:
    missing = set(QUBITS) - set(rhos)
    if missing:
        raise ValueError(f"missing reduced density matrices for {sorted(q.name for q in missing)}")
    checked = {k: _gate(rhos[k], strict) for k in QUBITS}
    per_qubit = {k: DualityMetrics(_visibility(m), _predictability(m)) for k, m in checked.items()}
    return TrialityReport(
        per_qubit=per_qubit,
        q_global=2.0 * (1.0 - sum(_purity(m) for m in checked.values()) / 3.0),
        mean_v_squared=sum(m.visibility**2 for m in per_qubit.values()) / 3.0,
        mean_p_squared=sum(m.predictability**2 for m in per_qubit.values()) / 3.0,
    )


def triality_sum_from_row(row: Mapping[str, float]) -> float:
    """Triality sum from a metrics row keyed ``V_A`` ... ``P_C``, ``Q``."""
    v2 = sum(row[f"V_{k.name}"] ** 2 for k in QUBITS) / 3.0
    p2 = sum(row[f"P_{k.name}"] ** 2 for k in QUBITS) / 3.0
    return row["Q"] + v2 + p2


def rounded_triality_sum(report: TrialityReport, decimals: int = 4) -> float:
    """Triality sum recomputed from table values rounded to ``decimals`` places.

    Rounding V, P and Q before combining them is what moves a printed sum
    away from one.
    """
    return triality_sum_from_row({name: round(v, decimals) for name, v in report.table_row().items()})


def analytic_sweep_case1(theta: float) -> tuple[float, float, float]:
    """(mean V^2, mean P^2, Q) with all three rotation angles equal to ``theta``."""
    s2 = math.sin(theta) ** 2
    c2 = math.cos(theta) ** 2
    v_term = (s2**3 + 2 * s2) / 3.0
    p_term = (2 * c2**2 + c2) / 3.0
    q = -(s2**3 + 2 * s2**2 - 3 * s2) / 3.0
    return v_term, p_term, q


def analytic_sweep_case2(theta: float) -> tuple[float, float, float]:
    """(mean V^2, mean P^2, Q) with only qubit A rotated by ``theta``."""
    return 0.0, math.cos(theta) ** 2, math.sin(theta) ** 2


ANALYTIC_SWEEPS = {1: analytic_sweep_case1, 2: analytic_sweep_case2}
