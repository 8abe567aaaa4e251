"""
Relational Qubit Communication

Sending classical messages in the relative parameters of two-qubit states,
so that sender and receiver need no shared reference frame.
Provides state preparation, collective twirling, Bayesian decoding and
information-gain scans.
"""

__version__ = "0.1.0"
__all__ = [
    "EncodingScheme",
    "Parameter",
    "RelativeParams",
    "StateVector2Q",
    "extract",
    "info_gain",
    "optimize_setting",
    "prepare_canonical",
    "table_one",
    "twirl_analytic",
]

from relational_qubit_comm.common.types import Parameter, RelativeParams
from relational_qubit_comm.inference.infogain import info_gain
from relational_qubit_comm.inference.scheme import EncodingScheme
from relational_qubit_comm.relative.extraction import extract
from relational_qubit_comm.relative.state import prepare_canonical
from relational_qubit_comm.scans.optimize import optimize_setting
from relational_qubit_comm.scans.table import table_one
from relational_qubit_comm.su2.states import StateVector2Q
from relational_qubit_comm.twirl.channel import twirl_analytic
