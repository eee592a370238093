"""Published superconducting-hardware results used as regression data.

All values are for the state prepared with angles (pi/4, pi/6, pi/8) unless
noted, measured with 10000 shots per operator.
"""

from __future__ import annotations

import math

from .qcore import QubitLabel, density_matrix
from .tomography import TomographyCounts

REFERENCE_THETAS = (math.pi / 4, math.pi / 6, math.pi / 8)
REFERENCE_SHOTS = 10000
REFERENCE_REPETITIONS = 5

HARDWARE_COUNTS = {
    QubitLabel.A: TomographyCounts.from_table(5000, 8252, 4411, 4989),
    QubitLabel.B: TomographyCounts.from_table(5000, 7743, 2729, 4951),
    QubitLabel.C: TomographyCounts.from_table(5000, 7740, 3196, 4941),
}

# Reconstructed matrices as printed, to four decimals.
HARDWARE_RHOS = {
    QubitLabel.A: density_matrix(0.8252, 0.0589 - 0.0011j, 0.1748),
    QubitLabel.B: density_matrix(0.7743, 0.2271 - 0.0049j, 0.2257),
    QubitLabel.C: density_matrix(0.7740, 0.1804 - 0.0059j, 0.2260),
}

HARDWARE_METRICS = {
    "V_A": 0.1178,
    "V_B": 0.4543,
    "V_C": 0.3610,
    "P_A": 0.6504,
    "P_B": 0.5486,
    "P_C": 0.5480,
    "Q": 0.5420,
}
HARDWARE_TRIALITY_SUM = 1.0003

SWEEP_THETAS = (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)

# Rows are (mean V^2, mean P^2, Q, sum) at SWEEP_THETAS. Deviations from the
# analytic curves are hardware artifacts, kept for side-by-side display only.
HARDWARE_SWEEP = {
    1: (
        (0.0001, 0.8960, 0.1030, 0.9991),
        (0.3322, 0.2910, 0.3770, 1.0002),
        (0.8670, 0.0001, 0.1330, 1.0001),
        (0.3320, 0.2930, 0.3750, 1.0000),
        (0.0001, 0.8680, 0.1370, 1.0051),
    ),
    2: (
        (0.0001, 0.9000, 0.0990, 0.9991),
        (0.0002, 0.4430, 0.5570, 1.0002),
        (0.0002, 0.0001, 0.9997, 1.0000),
        (0.0002, 0.4430, 0.5570, 1.0002),
        (0.0002, 0.8810, 0.1190, 1.0002),
    ),
}
