"""Command-line runner.

Examples::

    triality single --theta1 1/4pi --theta2 1/6pi --theta3 1/8pi --shots 10000 --reps 5
    triality exact --theta1 1/2pi --theta2 0 --theta3 0
    triality sweep --case 1 --seed 42 --format csv --out case1.csv
    triality tables --seed 7
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .duality import rounded_triality_sum
from .harness import (
    ConfigError,
    ExperimentConfig,
    Mode,
    emit_json,
    emit_sweep_csv,
    emit_table,
    make_noise,
    parse_angle,
    record_to_dict,
    replay_hardware_counts,
    run_single,
    run_sweep,
)
from .harness.output import format_matrix, format_theta, text_grid
from .qcore import QUBITS, validate_density_matrix
from .reference import HARDWARE_COUNTS, HARDWARE_SWEEP, SWEEP_THETAS


def _angle(text: str) -> float:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _angle_list(text: str) -> tuple[float, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("theta list is empty")
    return tuple(_angle(p) for p in parts)


def _add_shot_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--shots", type=int, default=10000, help="shots per measurement operator (even)")
    p.add_argument("--reps", type=int, default=5, help="repetitions averaged per setting")
    p.add_argument("--seed", type=int, default=0, help="master seed (non-negative)")
    p.add_argument("--readout-flip", type=float, default=0.0, help="symmetric readout flip probability")
    p.add_argument("--depolarizing", type=float, default=0.0, help="single-qubit depolarizing probability")


def _add_theta_options(p: argparse.ArgumentParser) -> None:
    defaults = ExperimentConfig()
    for i, default in enumerate(defaults.thetas, start=1):
        p.add_argument(
            f"--theta{i}", type=_angle, default=default, help="radians or a pi fraction like 1/4pi"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triality", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    single = sub.add_parser("single", help="tomography run at one angle triple")
    _add_theta_options(single)
    _add_shot_options(single)
    single.add_argument("--format", choices=("table", "csv", "json"), default="table")

    exact = sub.add_parser("exact", help="exact reduced states, no sampling")
    _add_theta_options(exact)
    exact.add_argument("--format", choices=("table", "csv", "json"), default="table")

    sweep = sub.add_parser("sweep", help="angle sweep against the analytic curves")
    sweep.add_argument("--case", type=int, choices=(1, 2), required=True,
                       help="1: all angles equal theta; 2: only qubit A rotated")
    sweep.add_argument("--theta-list", type=_angle_list, default=SWEEP_THETAS,
                       help="comma-separated angles (default 0,1/4pi,1/2pi,3/4pi,pi)")
    sweep.add_argument("--resolution", type=int, default=201, help="theory grid points in CSV output")
    _add_shot_options(sweep)
    sweep.add_argument("--format", choices=("table", "csv", "json"), default="csv")

    tables = sub.add_parser("tables", help="replay hardware counts and simulate both sweeps")
    _add_shot_options(tables)
    tables.add_argument("--format", choices=("table", "json"), default="table")

    for p in (single, exact, sweep, tables):
        p.add_argument("--out", type=Path, help="write output here instead of stdout")
    return parser


def _config(args: argparse.Namespace, mode: Mode, **extra) -> ExperimentConfig:
    fields = dict(mode=mode, **extra)
    if hasattr(args, "shots"):
        fields.update(
            shots=args.shots,
            repetitions=args.reps,
            seed=args.seed,
            noise=make_noise(args.readout_flip, args.depolarizing),
        )
    if hasattr(args, "theta1"):
        fields.update(theta1=args.theta1, theta2=args.theta2, theta3=args.theta3)
    return ExperimentConfig(**fields)


def _describe(config: ExperimentConfig) -> str:
    thetas = ", ".join(format_theta(t) for t in config.thetas)
    text = f"theta = ({thetas})"
    if config.mode is not Mode.EXACT:
        noise = config.noise
        text += (f"  shots={config.shots} reps={config.repetitions} seed={config.seed}"
                 f" readout_flip={noise.readout_flip_probability} depolarizing={noise.depolarizing_probability}")
    return text + "\n"


def _render_single(record, fmt: str) -> str:
    if fmt == "json":
        return emit_json(record)
    if fmt == "csv":
        return emit_table(record, "metrics", "csv")
    parts = [_describe(record.config)]
    if record.per_qubit_counts:
        parts += ["\nCounts (repetition average)\n", emit_table(record, "counts")]
        rhos = record.reconstructed
        title = "\nReconstructed single-qubit states\n"
    else:
        rhos = record.exact_rhos
        title = "\nExact single-qubit states\n"
    parts.append(title)
    for k in QUBITS:
        check = validate_density_matrix(rhos[k])
        parts.append(f"rho_{k.name}:\n{format_matrix(rhos[k])}\n  {check.describe()}\n")
    parts += ["\nDuality and entanglement\n", emit_table(record, "metrics")]
    spread = record.repetition_spread()
    if spread:
        parts.append("repetition stddev: " + "  ".join(f"{k}={v:.4f}" for k, v in spread.items()) + "\n")
    return "".join(parts)


def _render_tables(args: argparse.Namespace) -> str:
    rhos, report = replay_hardware_counts()
    sweeps = {case: run_sweep(_config(args, mode)) for case, mode in ((1, Mode.SWEEP_CASE1), (2, Mode.SWEEP_CASE2))}
    if args.format == "json":
        payload = {
            "hardware_replay": {
                "counts": {k.name: list(c.as_tuple()) for k, c in HARDWARE_COUNTS.items()},
                "reconstructed": {k.name: [[[z.real, z.imag] for z in row] for row in m.tolist()] for k, m in rhos.items()},
                "report": report.to_dict(),
                "rounded_triality_sum": rounded_triality_sum(report),
            },
            "sweeps": {str(case): [record_to_dict(r) for r in recs] for case, recs in sweeps.items()},
        }
        return json.dumps(payload, indent=2) + "\n"

    parts = ["Hardware counts (10000 shots per operator)\n"]
    header = ["operator", *(f"qubit {k.name}" for k in QUBITS)]
    rows = [[f"n{i}", *(HARDWARE_COUNTS[k].as_tuple()[i] for k in QUBITS)] for i in range(4)]
    parts.append(text_grid(header, rows))
    parts.append("\nLinear-inversion reconstruction\n")
    for k in QUBITS:
        parts.append(f"rho_{k.name}:\n{format_matrix(rhos[k])}\n")
    row = report.table_row()
    parts.append("\nDuality and entanglement from the replayed counts\n")
    parts.append(text_grid(list(row), [[f"{v:.4f}" for v in row.values()]]))
    parts.append(f"sum (full precision) = {report.triality_sum:.4f}; "
                 f"sum of rounded table values = {rounded_triality_sum(report):.4f}\n")

    for case, recs in sweeps.items():
        label = "theta1 = theta2 = theta3 = theta" if case == 1 else "theta1 = theta, theta2 = theta3 = 0"
        parts.append(f"\nSweep case {case}: {label}, ideal simulation (shots={args.shots}, reps={args.reps})\n")
        parts.append(emit_table(recs, "sweep"))
        hw_rows = [[format_theta(t), *(f"{x:.4f}" for x in vals)] for t, vals in zip(SWEEP_THETAS, HARDWARE_SWEEP[case])]
        parts.append(f"Published hardware values, case {case} (device noise, for comparison only)\n")
        parts.append(text_grid(["theta", "v_term", "p_term", "Q", "sum"], hw_rows))
    return "".join(parts)


def run(args: argparse.Namespace) -> str:
    if args.command == "single":
        return _render_single(run_single(_config(args, Mode.SINGLE)), args.format)
    if args.command == "exact":
        return _render_single(run_single(_config(args, Mode.EXACT)), args.format)
    if args.command == "sweep":
        if args.resolution < 1:
            raise ConfigError("resolution", f"must be a positive integer, got {args.resolution}")
        mode = Mode.SWEEP_CASE1 if args.case == 1 else Mode.SWEEP_CASE2
        records = run_sweep(_config(args, mode, sweep_points=args.theta_list))
        if args.format == "csv":
            return emit_sweep_csv(records, args.resolution)
        return emit_table(records, "sweep", args.format)
    return _render_tables(args)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = run(args)
    except ConfigError as exc:
        print(f"error: ConfigError[{exc.field}]: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
