"""Tabular records for CLI output, serialized as CSV, JSON or a rich table."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import numpy as np
import orjson
from rich.table import Table

from relational_qubit_comm.common.types import Parameter
from relational_qubit_comm.inference.infogain import InfoGainResult
from relational_qubit_comm.inference.priors import describe
from relational_qubit_comm.relative.extraction import Extraction
from relational_qubit_comm.scans.figures import FigureData
from relational_qubit_comm.scans.sweep import Scan2DResult, ScanResult
from relational_qubit_comm.scans.table import TableOneReport
from relational_qubit_comm.su2.states import BASIS_LABELS, DensityMatrix4, StateVector2Q

SIGNIFICANT_DIGITS = 12


class OutputFormat(StrEnum):
    """Serialization of command results."""

    CSV = "csv"
    JSON = "json"
    TABLE = "table"


def fmt_number(value: float) -> str:
    """Decimal text with 12 significant digits; negative zero prints as 0."""
    if value == 0.0:
        value = 0.0
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def _rounded(value: Any) -> Any:
    if isinstance(value, float | np.floating):
        x = float(value)
        return float(fmt_number(x)) if math.isfinite(x) else None
    return value


def _cell(value: Any) -> str:
    if isinstance(value, float | np.floating):
        return fmt_number(float(value))
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return ""
    return str(value)


@dataclass
class Records:
    """Column names, rows of values and free-form metadata for JSON."""

    columns: list[str]
    rows: list[list[Any]] = field(default_factory=list)
    title: str = ""
    metadata: dict[str, Any] = field(default_factory=dict)

    def add(self, *values: Any) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(list(values))

    def to_csv(self) -> str:
        output = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_cell(v) for v in row])
        return output.getvalue()

    def to_json(self) -> str:
        data = {
            "title": self.title,
            "metadata": {k: _rounded(v) for k, v in self.metadata.items()},
            "rows": [
                {c: _rounded(v) for c, v in zip(self.columns, row, strict=True)}
                for row in self.rows
            ],
        }
        return orjson.dumps(data, option=orjson.OPT_INDENT_2).decode() + "\n"

    def to_table(self) -> Table:
        table = Table(title=self.title or None)
        for column in self.columns:
            table.add_column(column, style="cyan" if column in _KEY_COLUMNS else None)
        for row in self.rows:
            table.add_row(*(_cell(v) for v in row))
        return table

    def render(self, fmt: OutputFormat) -> str:
        """CSV or JSON text; the table format is printed by the caller."""
        if fmt is OutputFormat.JSON:
            return self.to_json()
        return self.to_csv()


_KEY_COLUMNS = {"basis", "prior", "encoding", "axis_value", "a_value", "b_value", "parameter"}


def state_records(s: StateVector2Q, title: str = "amplitudes") -> Records:
    records = Records(["basis", "re", "im"], title=title)
    for label, amp in zip(BASIS_LABELS, s.amps, strict=True):
        records.add(label, float(amp.real), float(amp.imag))
    return records


def extraction_records(extraction: Extraction, concurrence: float) -> Records:
    p = extraction.params
    records = Records(
        ["alpha", "theta", "psi", "psi_identifiable", "schmidt_degenerate", "concurrence"],
        title="relative parameters",
    )
    records.add(
        p.alpha,
        p.theta,
        p.psi,
        extraction.psi_identifiable,
        extraction.schmidt_degenerate,
        concurrence,
    )
    return records


def density_records(rho: DensityMatrix4, title: str = "density matrix") -> Records:
    records = Records(["row", "col", "re", "im"], title=title)
    for i in range(4):
        for j in range(4):
            value = rho.matrix[i, j]
            records.add(BASIS_LABELS[i], BASIS_LABELS[j], float(value.real), float(value.imag))
    return records


def infogain_records(result: InfoGainResult) -> Records:
    records = Records(
        ["p_singlet", "p_triplet", "gain_singlet", "gain_triplet", "avg_gain"],
        title=result.scheme.describe(),
        metadata={"prior": describe(result.prior)},
    )
    records.add(*result.p_outcome, *result.gain_per_outcome, result.avg_gain)
    return records


def scan_records(result: ScanResult) -> Records:
    records = Records(
        ["axis_value", "avg_gain"],
        title=f"{result.scheme.describe()} vs {result.axis.value}0",
        metadata={
            "axis": result.axis.value,
            "prior": describe(result.prior),
            "quad_points": result.quad.n_points,
        },
    )
    for x, g in zip(result.axis_values, result.avg_gain, strict=True):
        records.add(x, g)
    return records


def scan2d_records(result: Scan2DResult) -> Records:
    records = Records(
        ["a_value", "b_value", "avg_gain"],
        title=f"{result.scheme.describe()} over {result.axis_a.value}0, {result.axis_b.value}0",
        metadata={
            "axis_a": result.axis_a.value,
            "axis_b": result.axis_b.value,
            "prior": describe(result.prior),
            "quad_points": result.quad.n_points,
        },
    )
    for a, row in zip(result.a_values, result.avg_gain, strict=True):
        for b, g in zip(result.b_values, row, strict=True):
            records.add(a, b, g)
    return records


def table_records(report: TableOneReport) -> Records:
    records = Records(
        ["prior", "encoding", "max_gain", "alpha0", "theta0", "psi0", "mirrored_gain"],
        title="best average gain per encoding",
        metadata={
            "baseline_uniform": report.baselines["uniform"],
            "baseline_discrete": report.baselines["discrete"],
            "advantage": report.advantage,
            "quad_points": report.quad_points,
            "resolution": report.resolution,
        },
    )
    for cell in report.cells:
        fixed = cell.fixed_values
        records.add(
            cell.prior,
            cell.encoding.value,
            cell.max_gain,
            fixed.get(Parameter.ALPHA),
            fixed.get(Parameter.THETA),
            fixed.get(Parameter.PSI),
            cell.mirrored_gain,
        )
    return records


def figure_records(data: FigureData) -> Records:
    """Long form: one row per node, tagged by prior (curves) or encoding (maps)."""
    if data.curves:
        records = Records(["prior", "axis_value", "avg_gain"], title=data.title)
        for family, curve in data.curves.items():
            records.metadata["axis"] = curve.axis.value
            for x, g in zip(curve.axis_values, curve.avg_gain, strict=True):
                records.add(family, x, g)
        return records

    records = Records(["encoding", "a_value", "b_value", "avg_gain"], title=data.title)
    for encoding, grid in data.maps.items():
        records.metadata[f"{encoding.value}_axes"] = f"{grid.axis_a.value},{grid.axis_b.value}"
        for a, row in zip(grid.a_values, grid.avg_gain, strict=True):
            for b, g in zip(grid.b_values, row, strict=True):
                records.add(encoding.value, a, b, g)
    return records
