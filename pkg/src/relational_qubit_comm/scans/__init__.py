"""Sensitivity analysis, gain sweeps, optimal settings and figure data."""

from relational_qubit_comm.scans.figures import FIGURES, FigureData, figure, invocations
from relational_qubit_comm.scans.optimize import OptimalSetting, optimize_setting
from relational_qubit_comm.scans.sensitivity import (
    average_sensitivity,
    derivative,
    finite_difference,
    sensitivity,
    sensitivity_optimal,
)
from relational_qubit_comm.scans.sweep import Scan2DResult, ScanGrid, ScanResult, scan1d, scan2d
from relational_qubit_comm.scans.table import (
    TableCell,
    TableOneReport,
    default_template,
    prior_for,
    product_baseline,
    table_one,
)

__all__ = [
    "FIGURES",
    "FigureData",
    "OptimalSetting",
    "Scan2DResult",
    "ScanGrid",
    "ScanResult",
    "TableCell",
    "TableOneReport",
    "average_sensitivity",
    "default_template",
    "derivative",
    "figure",
    "finite_difference",
    "invocations",
    "optimize_setting",
    "prior_for",
    "product_baseline",
    "scan1d",
    "scan2d",
    "sensitivity",
    "sensitivity_optimal",
    "table_one",
]
