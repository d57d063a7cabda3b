"""量子态数据模型定义.

单比特密度矩阵 (2×2)、两比特密度矩阵 (4×4)、Bloch 向量与 Pauli 轴。
矩阵以只读 complex128 数组保存，构造时即校验厄米、单位迹、半正定。
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from src.config import settings
from src.errors import DomainError
from src.qstate.linalg import as_square_matrix, eigenvalues_2x2, jacobi_eigenvalues, require_hermitian

TRACE_TOL = 1e-12
PURITY_TOL = 1e-9

_PAULI = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
for _matrix in _PAULI.values():
    _matrix.setflags(write=False)


class PauliAxis(Enum):
    """Pauli 轴（σ₀ 为单位阵）."""

    I = "I"  # noqa: E741
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def matrix(self) -> np.ndarray:
        """对应的 2×2 Pauli 矩阵."""
        return _PAULI[self.value]

    @property
    def bloch_signs(self) -> tuple[int, int, int]:
        """共轭作用 σρσ 对 Bloch 分量 (n_x, n_y, n_z) 的符号."""
        return {
            "I": (1, 1, 1),
            "X": (1, -1, -1),
            "Y": (-1, 1, -1),
            "Z": (-1, -1, 1),
        }[self.value]


def _require_unit_trace(matrix: np.ndarray) -> None:
    trace = matrix.trace()
    if abs(trace - 1.0) >= TRACE_TOL:
        raise DomainError(f"state must have unit trace, got Tr = {trace.real:.15g}")


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """单比特密度矩阵 ρ.

    Attributes:
        entries: 2×2 只读复矩阵
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        matrix = as_square_matrix(self.entries, 2)
        require_hermitian(matrix)
        _require_unit_trace(matrix)
        lowest = eigenvalues_2x2(matrix)[1]
        if lowest < -settings.numerics.psd_tol:
            raise DomainError(f"state must be positive semidefinite, eigenvalue {lowest:.3e}")
        object.__setattr__(self, "entries", matrix)

    @property
    def purity(self) -> float:
        """Tr ρ²."""
        return float(np.trace(self.entries @ self.entries).real)

    @property
    def is_pure(self) -> bool:
        """是否为秩 1 投影."""
        return abs(self.purity - 1.0) < PURITY_TOL

    def allclose(self, other: "DensityMatrix", atol: float = 1e-12) -> bool:
        """逐元素比较."""
        return bool(np.allclose(self.entries, other.entries, rtol=0.0, atol=atol))


@dataclass(frozen=True)
class BlochVector:
    """Bloch 向量 n⃗，ρ = ½(1 + n⃗·σ⃗).

    Attributes:
        n_x: x 分量
        n_y: y 分量
        n_z: z 分量
    """

    n_x: float
    n_y: float
    n_z: float

    def __post_init__(self) -> None:
        if self.norm > 1.0 + 1e-12:
            raise DomainError(f"Bloch vector norm must be <= 1, got {self.norm:.15g}")

    @property
    def norm(self) -> float:
        """向量长度."""
        return math.sqrt(self.n_x**2 + self.n_y**2 + self.n_z**2)

    def as_tuple(self) -> tuple[float, float, float]:
        """以元组返回三个分量."""
        return (self.n_x, self.n_y, self.n_z)


@dataclass(frozen=True, eq=False)
class TwoQubitMatrix:
    """两比特密度矩阵，基矢顺序 |00⟩,|01⟩,|10⟩,|11⟩.

    Attributes:
        entries: 4×4 只读复矩阵
        eigenvalues: 构造时求得的降序特征值（缓存，避免重复对角化）
    """

    entries: np.ndarray
    eigenvalues: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        matrix = as_square_matrix(self.entries, 4)
        require_hermitian(matrix)
        _require_unit_trace(matrix)
        eigenvalues = jacobi_eigenvalues(matrix)
        if eigenvalues[-1] < -settings.numerics.psd_tol:
            raise DomainError(
                f"state must be positive semidefinite, eigenvalue {eigenvalues[-1]:.3e}"
            )
        eigenvalues.setflags(write=False)
        object.__setattr__(self, "entries", matrix)
        object.__setattr__(self, "eigenvalues", eigenvalues)

    def allclose(self, other: "TwoQubitMatrix", atol: float = 1e-12) -> bool:
        """逐元素比较."""
        return bool(np.allclose(self.entries, other.entries, rtol=0.0, atol=atol))
