"""Derivatives of the singlet probability and the settings they single out."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from relational_qubit_comm.common.exceptions import InvalidConfigurationError
from relational_qubit_comm.common.types import DEFAULT_SCAN_NODES, Parameter, RelativeParams
from relational_qubit_comm.inference.scheme import EncodingScheme
from relational_qubit_comm.twirl.projectors import p_singlet_array

_TIE_TOL = 1e-12


def _derivative_array(
    alpha: npt.ArrayLike,
    theta: npt.ArrayLike,
    psi: npt.ArrayLike,
    wrt: Parameter,
) -> npt.NDArray[np.float64]:
    a, t, s = np.broadcast_arrays(
        np.asarray(alpha, dtype=np.float64),
        np.asarray(theta, dtype=np.float64),
        np.asarray(psi, dtype=np.float64),
    )
    if wrt is Parameter.THETA:
        return np.sin(t) * (1.0 + np.sin(2 * a) * np.cos(s)) / 4.0
    if wrt is Parameter.PSI:
        return -(1.0 - np.cos(t)) * np.sin(2 * a) * np.sin(s) / 4.0
    return (1.0 - np.cos(t)) * np.cos(2 * a) * np.cos(s) / 2.0


def derivative(p: RelativeParams, wrt: Parameter) -> float:
    """Signed partial derivative of (1 - cos theta)(1 + sin 2alpha cos psi)/4."""
    return float(_derivative_array(p.alpha, p.theta, p.psi, Parameter(wrt)))


def sensitivity(p: RelativeParams, wrt: Parameter) -> float:
    """|d p(singlet) / d wrt| at p."""
    return abs(derivative(p, wrt))


def finite_difference(p: RelativeParams, wrt: Parameter, h: float = 1e-6) -> float:
    """Central difference of the singlet probability; evaluated off the range at the edges."""
    wrt = Parameter(wrt)
    values = {"alpha": p.alpha, "theta": p.theta, "psi": p.psi}
    up, down = dict(values), dict(values)
    up[wrt.value] += h
    down[wrt.value] -= h
    f_up = p_singlet_array(up["alpha"], up["theta"], up["psi"])
    f_down = p_singlet_array(down["alpha"], down["theta"], down["psi"])
    return float((f_up - f_down) / (2.0 * h))


def average_sensitivity(scheme: EncodingScheme, n: int = DEFAULT_SCAN_NODES) -> float:
    """Mean over the message range of the sensitivity to the message parameter."""
    message = scheme.message_param
    xs = np.linspace(message.lo, message.hi, n)
    values: dict[Parameter, npt.ArrayLike] = dict(scheme.fixed_values)
    values[message] = xs
    d = _derivative_array(
        values[Parameter.ALPHA], values[Parameter.THETA], values[Parameter.PSI], message
    )
    return float(np.mean(np.abs(d)))


def sensitivity_optimal(
    scheme: EncodingScheme, axis: Parameter, n: int = DEFAULT_SCAN_NODES
) -> tuple[float, ...]:
    """
    Values of the fixed parameter ``axis`` that maximize the average sensitivity.

    Every grid node within 1e-12 of the maximum is returned, smallest first, so
    a symmetric optimum such as psi0 in {0, pi} shows up as two values.
    """
    axis = Parameter(axis)
    if axis is scheme.message_param:
        raise InvalidConfigurationError(
            "sensitivity optimum is taken over a fixed parameter",
            details={"axis": axis.value, "message_param": scheme.message_param.value},
        )
    grid = np.linspace(axis.lo, axis.hi, n)
    averages = np.array(
        [average_sensitivity(scheme.with_fixed(**{axis.value: float(v)}), n) for v in grid]
    )
    best = float(np.max(averages))
    return tuple(float(v) for v, a in zip(grid, averages, strict=True) if a >= best - _TIE_TOL)
