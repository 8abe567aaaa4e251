"""Common types, tolerances, exceptions and logging helpers."""

from relational_qubit_comm.common.decorators import timed
from relational_qubit_comm.common.exceptions import (
    ImpossibleOutcomeError,
    InvalidConfigurationError,
    InvalidInputError,
    NumericalDomainError,
    OutOfRangeError,
    RelFrameError,
)
from relational_qubit_comm.common.logsetup import configure_logging
from relational_qubit_comm.common.types import (
    Bits,
    Parameter,
    Radians,
    RelativeParams,
)

__all__ = [
    "Bits",
    "Parameter",
    "Radians",
    "RelativeParams",
    "RelFrameError",
    "InvalidInputError",
    "OutOfRangeError",
    "InvalidConfigurationError",
    "NumericalDomainError",
    "ImpossibleOutcomeError",
    "configure_logging",
    "timed",
]
