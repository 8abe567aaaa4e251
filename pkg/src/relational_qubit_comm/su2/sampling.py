"""Seeded random streams and Haar sampling on SU(2)."""

from __future__ import annotations

from typing import ClassVar

import numpy as np
import numpy.typing as npt

from relational_qubit_comm.common.exceptions import InvalidInputError
from relational_qubit_comm.su2.gates import tensor
from relational_qubit_comm.su2.states import StateVector2Q, Unitary2, Unitary4

_MAX_SEED = 2**64 - 1


class RandomStream:
    """
    A seeded source of normal deviates.

    Identical seed, algorithm and spawn path give identical sequences. Each
    concurrent task must own its own stream; derive them with ``spawn``.

    Example:
        ```python
        root = RandomStream(seed=7)
        streams = [root.spawn(i) for i in range(workers)]
        u = haar_su2(streams[0])
        ```
    """

    ALGORITHMS: ClassVar[dict[str, type[np.random.BitGenerator]]] = {
        "pcg64": np.random.PCG64,
        "philox": np.random.Philox,
        "sfc64": np.random.SFC64,
        "mt19937": np.random.MT19937,
    }

    def __init__(
        self,
        seed: int,
        algorithm: str = "pcg64",
        *,
        spawn_key: tuple[int, ...] = (),
    ) -> None:
        if not 0 <= seed <= _MAX_SEED:
            raise InvalidInputError(
                "seed must be a 64-bit unsigned integer", details={"seed": seed}
            )
        if algorithm not in self.ALGORITHMS:
            raise InvalidInputError(
                f"unknown bit generator {algorithm!r}",
                details={"supported": sorted(self.ALGORITHMS)},
            )
        self.seed = seed
        self.algorithm = algorithm
        self.spawn_key = spawn_key
        sequence = np.random.SeedSequence(seed, spawn_key=spawn_key)
        self._generator = np.random.Generator(self.ALGORITHMS[algorithm](sequence))

    def __repr__(self) -> str:
        return (
            f"RandomStream(seed={self.seed}, algorithm={self.algorithm!r}, "
            f"spawn_key={self.spawn_key})"
        )

    def spawn(self, index: int) -> RandomStream:
        """Child stream for task ``index``, independent of the parent's position."""
        return RandomStream(self.seed, self.algorithm, spawn_key=(*self.spawn_key, index))

    def standard_normal(self, size: int) -> npt.NDArray[np.float64]:
        return self._generator.standard_normal(size)


def quaternion_to_su2(q: npt.ArrayLike) -> Unitary2:
    """Map a unit quaternion (w, x, y, z) to [[w - iz, -y - ix], [y - ix, w + iz]]."""
    w, x, y, z = np.asarray(q, dtype=np.float64)
    return Unitary2(
        np.array(
            [[w - 1j * z, -y - 1j * x], [y - 1j * x, w + 1j * z]],
            dtype=np.complex128,
        )
    )


def haar_su2(stream: RandomStream) -> Unitary2:
    """Haar-distributed SU(2) element from four normals normalized to a unit quaternion."""
    q = stream.standard_normal(4)
    return quaternion_to_su2(q / np.linalg.norm(q))


def haar_local_pair(stream: RandomStream) -> Unitary4:
    """Independent Haar rotations on the two qubits, u x v."""
    return tensor(haar_su2(stream), haar_su2(stream))


def haar_state(stream: RandomStream) -> StateVector2Q:
    """Haar-random pure two-qubit state from a complex Gaussian 4-vector."""
    z = stream.standard_normal(4) + 1j * stream.standard_normal(4)
    return StateVector2Q.normalized(z)


def haar_su2_batch(stream: RandomStream, n: int) -> npt.NDArray[np.complex128]:
    """
    n Haar SU(2) matrices as an (n, 2, 2) array, drawn like ``haar_su2``.

    Consumes 4n normals in the same order as n successive ``haar_su2`` calls.
    """
    if n < 1:
        raise InvalidInputError("batch size must be at least 1", details={"n": n})
    q = stream.standard_normal(4 * n).reshape(n, 4)
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    w, x, y, z = q.T
    batch = np.empty((n, 2, 2), dtype=np.complex128)
    batch[:, 0, 0] = w - 1j * z
    batch[:, 0, 1] = -y - 1j * x
    batch[:, 1, 0] = y - 1j * x
    batch[:, 1, 1] = w + 1j * z
    return batch
