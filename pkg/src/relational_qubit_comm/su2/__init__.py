"""Dense complex linear algebra at dimensions 2 and 4."""

from relational_qubit_comm.su2.gates import (
    cnot,
    collective,
    identity2,
    identity4,
    pauli,
    rotation_y,
    rotation_z,
    tensor,
)
from relational_qubit_comm.su2.sampling import (
    RandomStream,
    haar_local_pair,
    haar_state,
    haar_su2,
    haar_su2_batch,
    quaternion_to_su2,
)
from relational_qubit_comm.su2.states import (
    BASIS_LABELS,
    DensityMatrix4,
    StateVector2Q,
    Unitary2,
    Unitary4,
    apply,
    bloch_vector,
    equal_up_to_phase,
)

__all__ = [
    "BASIS_LABELS",
    "DensityMatrix4",
    "RandomStream",
    "StateVector2Q",
    "Unitary2",
    "Unitary4",
    "apply",
    "bloch_vector",
    "cnot",
    "collective",
    "equal_up_to_phase",
    "haar_local_pair",
    "haar_state",
    "haar_su2",
    "haar_su2_batch",
    "identity2",
    "identity4",
    "pauli",
    "quaternion_to_su2",
    "rotation_y",
    "rotation_z",
    "tensor",
]
