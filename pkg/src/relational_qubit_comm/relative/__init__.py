"""Frame-invariant description of pure two-qubit states."""

from relational_qubit_comm.relative.extraction import (
    Extraction,
    SchmidtForm,
    extract,
    extract_params,
    reduced_density,
    schmidt_form,
)
from relational_qubit_comm.relative.state import (
    InvariantPair,
    concurrence,
    invariants_of,
    orbit_equal,
    phase_fixed,
    prepare_canonical,
    prepare_via_circuit,
)

__all__ = [
    "Extraction",
    "InvariantPair",
    "SchmidtForm",
    "concurrence",
    "extract",
    "extract_params",
    "invariants_of",
    "orbit_equal",
    "phase_fixed",
    "prepare_canonical",
    "prepare_via_circuit",
    "reduced_density",
    "schmidt_form",
]
