"""量子态模块：2×2 / 4×4 厄米矩阵上的态、Pauli 映射、保真度与熵."""

from .linalg import jacobi_eigenvalues
from .models import BlochVector, DensityMatrix, PauliAxis, TwoQubitMatrix
from .states import (
    BELL_LABELS,
    IDENTITY_2,
    IDENTITY_4,
    bell_state,
    bloch_of,
    density_of,
    hermitian_eigenvalues,
    is_entangled_ppt,
    local_pauli_conjugate,
    maximally_mixed_qubit,
    partial_transpose,
    pauli_conjugate,
    pauli_matrix,
    pure_state,
    pure_states_batch,
    trace_fidelity,
    von_neumann_entropy,
    werner_state,
)

__all__ = [
    "BlochVector",
    "DensityMatrix",
    "PauliAxis",
    "TwoQubitMatrix",
    "BELL_LABELS",
    "IDENTITY_2",
    "IDENTITY_4",
    "bell_state",
    "bloch_of",
    "density_of",
    "hermitian_eigenvalues",
    "is_entangled_ppt",
    "jacobi_eigenvalues",
    "local_pauli_conjugate",
    "maximally_mixed_qubit",
    "partial_transpose",
    "pauli_conjugate",
    "pauli_matrix",
    "pure_state",
    "pure_states_batch",
    "trace_fidelity",
    "von_neumann_entropy",
    "werner_state",
]
