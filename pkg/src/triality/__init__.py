"""Three-qubit statevector simulation, single-qubit tomography and the
entanglement-constrained duality sum ``Q + mean(V^2) + mean(P^2) = 1``."""

from .circuit import CNOT, Ry, apply_gate, prepare_theta_state, theta_circuit, theta_state_formula
from .duality import (
    DualityMetrics,
    TrialityReport,
    analytic_sweep_case1,
    analytic_sweep_case2,
    global_entanglement,
    predictability,
    triality_report,
    visibility,
)
from .qcore import (
    InvalidDensityMatrixError,
    InvalidStateError,
    PureState3,
    QubitLabel,
    ValidationResult,
    purity,
    random_pure_state,
    reduced_density_matrix,
    validate_density_matrix,
)
from .tomography import (
    MeasurementOperator,
    NoiseConfig,
    StokesVector,
    TomographyCounts,
    outcome_probability,
    reconstruct,
    simulate_counts,
    stokes_from_counts,
    tomograph_qubit,
)

__version__ = "0.1.0"
