from .config import ConfigError, ExperimentConfig, Mode, make_noise, parse_angle
from .output import emit_json, emit_sweep_csv, emit_table, record_to_dict
from .runner import (
    ExperimentRecord,
    average_counts,
    derive_seed,
    point_seed,
    replay_hardware_counts,
    run_single,
    run_sweep,
)

__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "ExperimentRecord",
    "Mode",
    "average_counts",
    "derive_seed",
    "emit_json",
    "emit_sweep_csv",
    "emit_table",
    "make_noise",
    "parse_angle",
    "point_seed",
    "record_to_dict",
    "replay_hardware_counts",
    "run_single",
    "run_sweep",
]
