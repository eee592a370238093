"""Text, CSV and JSON renderings of experiment records.

Human tables round to four decimals. CSV and JSON carry full ``repr``
precision so that identical runs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..duality import TrialityReport
from ..qcore import QUBITS
from ..tomography import MeasurementOperator
from .runner import ExperimentRecord, theory_grid

LAYOUTS = ("counts", "metrics", "sweep")
FORMATS = ("table", "csv", "json")

METRIC_COLUMNS = ("V_A", "V_B", "V_C", "P_A", "P_B", "P_C", "Q")
SWEEP_SIM_COLUMNS = ("v_term", "p_term", "Q", "sum")
SWEEP_THEORY_COLUMNS = ("v_theory", "p_theory", "q_theory")

OPERATOR_LABELS = {
    MeasurementOperator.MU0: "mu0=|0><0|+|1><1|",
    MeasurementOperator.MU1: "mu1=|0><0|",
    MeasurementOperator.MU2: "mu2=|-><-|",
    MeasurementOperator.MU3: "mu3=|R><R|",
}


def format_theta(theta: float) -> str:
    """``pi/4``-style label for small rational multiples of pi, else 4 decimals."""
    frac = Fraction(theta / math.pi).limit_denominator(24)
    if abs(float(frac) * math.pi - theta) > 1e-9:
        return f"{theta:.4f}"
    if frac == 0:
        return "0"
    num = "" if abs(frac.numerator) == 1 else str(abs(frac.numerator))
    sign = "-" if frac < 0 else ""
    den = "" if frac.denominator == 1 else f"/{frac.denominator}"
    return f"{sign}{num}pi{den}"


def _fmt(x: float) -> str:
    # adding 0.0 turns a rounded -0.0 into 0.0
    return f"{round(x, 4) + 0.0:.4f}"


def _num(x: float) -> str:
    return repr(float(x))


def text_grid(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(line, widths)) for line in (header, *rows)]
    rule = "-" * len(lines[0])
    return "\n".join([rule, lines[0], rule, *lines[1:], rule]) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _metric_values(report: TrialityReport) -> list[float]:
    row = report.table_row()
    return [row[c] for c in METRIC_COLUMNS] + [report.triality_sum]


def counts_rows(record: ExperimentRecord) -> list[list]:
    return [
        [OPERATOR_LABELS[op], f"n{int(op)}", *(record.per_qubit_counts[k].as_tuple()[int(op)] for k in QUBITS)]
        for op in MeasurementOperator
    ]


def metrics_rows(record: ExperimentRecord) -> list[tuple[str, TrialityReport]]:
    rows = []
    if record.report is not None:
        rows.append(("sim", record.report))
    rows.append(("exact", record.exact_report))
    return rows


def emit_table(records: ExperimentRecord | Sequence[ExperimentRecord], layout: str = "metrics", fmt: str = "table") -> str:
    if fmt == "json":
        return emit_json(records)
    if isinstance(records, ExperimentRecord):
        records = [records]
    if not records:
        raise ValueError("no records to render")
    if layout not in LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}; choose from {LAYOUTS}")
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")

    if layout == "counts":
        header = ["operator", "n_i", *(f"qubit {k.name}" for k in QUBITS)]
        chunks = []
        for rec in records:
            if not rec.per_qubit_counts:
                continue
            rows = counts_rows(rec)
            chunks.append(text_grid(header, rows) if fmt == "table" else _csv(header, rows))
        return "".join(chunks)

    if layout == "metrics":
        header = ["run", *METRIC_COLUMNS, "sum"]
        rows = []
        for rec in records:
            for label, report in metrics_rows(rec):
                values = _metric_values(report)
                rows.append([label, *(map(_fmt, values) if fmt == "table" else map(_num, values))])
        return text_grid(header, rows) if fmt == "table" else _csv(header, rows)

    with_sim = any(r.report is not None for r in records)
    with_theory = any(r.analytic is not None for r in records)
    header = ["theta"]
    if with_sim:
        header += SWEEP_SIM_COLUMNS
    if with_theory:
        header += SWEEP_THEORY_COLUMNS
    rows = []
    for rec in sorted(records, key=lambda r: r.theta if r.theta is not None else r.config.theta1):
        theta = rec.theta if rec.theta is not None else rec.config.theta1
        values = []
        if with_sim:
            values += list(rec.terms) if rec.terms else [math.nan] * 4
        if with_theory:
            values += list(rec.analytic) if rec.analytic else [math.nan] * 3
        if fmt == "table":
            rows.append([format_theta(theta), *map(_fmt, values)])
        else:
            rows.append([_num(theta), *map(_num, values)])
    return text_grid(header, rows) if fmt == "table" else _csv(header, rows)


SWEEP_CSV_HEADER = (
    "kind",
    "repetition",
    "theta",
    "v_term_theory",
    "p_term_theory",
    "q_theory",
    "v_term_sim",
    "p_term_sim",
    "q_sim",
    "sum_sim",
)


def emit_sweep_csv(records: Sequence[ExperimentRecord], resolution: int = 201) -> str:
    """Dense analytic curves plus simulated points, enough to redraw the sweep figures.

    ``kind`` is ``theory`` for grid rows, ``sim`` for repetition-averaged
    points and ``sim_rep`` for individual repetitions.
    """
    if not records:
        raise ValueError("no records to render")
    cases = {r.sweep_case for r in records}
    if None in cases or len(cases) != 1:
        raise ValueError("sweep CSV needs records from exactly one sweep case")
    (case,) = cases
    thetas = [r.theta for r in records]
    lo, hi = min(0.0, *thetas), max(math.pi, *thetas)

    rows = []
    for theta, v, p, q in theory_grid(case, resolution, lo, hi):
        rows.append(["theory", "", _num(theta), _num(v), _num(p), _num(q), "", "", "", ""])
    for rec in sorted(records, key=lambda r: r.theta):
        theory = [_num(x) for x in rec.analytic]
        rows.append(["sim", "", _num(rec.theta), *theory, *map(_num, rec.terms)])
        for i, rep in enumerate(rec.repetition_reports):
            terms = (rep.mean_v_squared, rep.mean_p_squared, rep.q_global, rep.triality_sum)
            rows.append(["sim_rep", str(i), _num(rec.theta), *theory, *map(_num, terms)])
    return _csv(SWEEP_CSV_HEADER, rows)


def _matrix(m: np.ndarray) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _counts(c) -> dict:
    return {"n0": c.n0, "n1": c.n1, "n2": c.n2, "n3": c.n3, "shots": c.shots}


def record_to_dict(record: ExperimentRecord) -> dict:
    """JSON-ready dict; complex matrices become ``[[re, im], ...]`` rows."""
    return {
        "config": record.config.to_dict(),
        "theta": record.theta,
        "sweep_case": record.sweep_case,
        "analytic": None if record.analytic is None else dict(zip(("v_term", "p_term", "q"), record.analytic)),
        "per_qubit_counts": {k.name: _counts(c) for k, c in record.per_qubit_counts.items()},
        "reconstructed": {k.name: _matrix(m) for k, m in record.reconstructed.items()},
        "report": None if record.report is None else record.report.to_dict(),
        "exact_report": record.exact_report.to_dict(),
        "exact_rhos": {k.name: _matrix(m) for k, m in record.exact_rhos.items()},
        "repetition_counts": [{k.name: _counts(c) for k, c in rep.items()} for rep in record.repetition_counts],
        "repetition_reports": [r.to_dict() for r in record.repetition_reports],
        "repetition_spread": record.repetition_spread(),
    }


def emit_json(records: ExperimentRecord | Sequence[ExperimentRecord]) -> str:
    """One record renders as an object, a sequence as a list."""
    if isinstance(records, ExperimentRecord):
        payload = record_to_dict(records)
    else:
        payload = [record_to_dict(r) for r in records]
    return json.dumps(payload, indent=2) + "\n"


def format_matrix(m: np.ndarray) -> str:
    def z(v: complex) -> str:
        sign = "-" if v.imag < 0 else "+"
        return f"{v.real:.4f}{sign}i{abs(v.imag):.4f}"

    return "\n".join("  [" + ", ".join(z(v) for v in row) + "]" for row in np.asarray(m))
