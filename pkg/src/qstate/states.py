"""量子态构造与基本运算.

所有函数均为纯函数，输入输出为不可变值，可在任意线程并发调用。
"""

import logging
import math
from numbers import Integral

import numpy as np

from src.config import settings
from src.errors import ContractViolationError, DomainError, PositivityError
from src.qstate.linalg import as_square_matrix, jacobi_eigenvalues, require_hermitian
from src.qstate.models import BlochVector, DensityMatrix, PauliAxis, TwoQubitMatrix

logger = logging.getLogger(__name__)

IDENTITY_2 = np.eye(2, dtype=np.complex128)
IDENTITY_4 = np.eye(4, dtype=np.complex128)

# Bell 基顺序固定为 (ψ⁻, ψ⁺, φ⁻, φ⁺)，每个元素是未归一化的 ±1 振幅向量
_BELL_AMPLITUDES = (
    np.array([0, 1, -1, 0], dtype=np.complex128),
    np.array([0, 1, 1, 0], dtype=np.complex128),
    np.array([1, 0, 0, -1], dtype=np.complex128),
    np.array([1, 0, 0, 1], dtype=np.complex128),
)
BELL_LABELS = ("psi-", "psi+", "phi-", "phi+")


def pauli_matrix(axis: PauliAxis) -> np.ndarray:
    """返回 Pauli 矩阵."""
    return axis.matrix


def _density_from_bloch(n_x: float, n_y: float, n_z: float) -> np.ndarray:
    return 0.5 * np.array(
        [[1 + n_z, n_x - 1j * n_y], [n_x + 1j * n_y, 1 - n_z]],
        dtype=np.complex128,
    )


def pure_state(theta: float, phi: float) -> DensityMatrix:
    """Bloch 球面上的纯态 ρ = ½(1 + n⃗·σ⃗).

    Args:
        theta: 极角，0 ≤ θ ≤ π
        phi: 方位角，0 ≤ φ < 2π

    Returns:
        秩 1 投影

    Raises:
        DomainError: 角度越界
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi < 2 * math.pi:
        raise DomainError(f"phi must lie in [0, 2pi), got {phi}")
    sin_theta = math.sin(theta)
    return DensityMatrix(
        _density_from_bloch(
            sin_theta * math.cos(phi),
            sin_theta * math.sin(phi),
            math.cos(theta),
        )
    )


def pure_states_batch(cos_theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """批量构造纯态密度矩阵.

    Args:
        cos_theta: 形状 (N,) 的 cosθ
        phi: 形状 (N,) 的方位角

    Returns:
        形状 (N, 2, 2) 的复数组（不做逐个校验）
    """
    cos_theta = np.asarray(cos_theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    sin_theta = np.sqrt(np.clip(1.0 - cos_theta**2, 0.0, None))
    n_x = sin_theta * np.cos(phi)
    n_y = sin_theta * np.sin(phi)
    states = np.empty(cos_theta.shape + (2, 2), dtype=np.complex128)
    states[..., 0, 0] = 0.5 * (1 + cos_theta)
    states[..., 0, 1] = 0.5 * (n_x - 1j * n_y)
    states[..., 1, 0] = 0.5 * (n_x + 1j * n_y)
    states[..., 1, 1] = 0.5 * (1 - cos_theta)
    return states


def bloch_of(rho: DensityMatrix) -> BlochVector:
    """n_k = Tr(ρ σ_k)."""
    components = (
        float(np.trace(rho.entries @ axis.matrix).real)
        for axis in (PauliAxis.X, PauliAxis.Y, PauliAxis.Z)
    )
    return BlochVector(*components)


def density_of(vector: BlochVector) -> DensityMatrix:
    """由 Bloch 向量还原密度矩阵."""
    return DensityMatrix(_density_from_bloch(*vector.as_tuple()))


def pauli_conjugate(rho: DensityMatrix, axis: PauliAxis) -> DensityMatrix:
    """σ_axis ρ σ_axis."""
    sigma = axis.matrix
    return DensityMatrix(sigma @ rho.entries @ sigma)


def maximally_mixed_qubit() -> DensityMatrix:
    """1₂/2."""
    return DensityMatrix(IDENTITY_2 / 2)


def trace_fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """以纯态为参照的得分 Tr(ρσ).

    Args:
        rho: 密度矩阵
        sigma: 密度矩阵（两者至少一个为纯态）

    Returns:
        [0, 1] 内的实数

    Raises:
        ContractViolationError: 两者都不是纯态
    """
    if not (rho.is_pure or sigma.is_pure):
        raise ContractViolationError(
            "trace_fidelity requires at least one pure argument "
            f"(purities {rho.purity:.6f}, {sigma.purity:.6f})"
        )
    overlap = np.trace(rho.entries @ sigma.entries)
    if abs(overlap.imag) > 1e-12:
        logger.warning(f"⚠️ Tr(ρσ) 虚部残差 {overlap.imag:.3e}")
    return min(1.0, max(0.0, float(overlap.real)))


def _as_hermitian_4x4(m: TwoQubitMatrix | np.ndarray) -> np.ndarray:
    if isinstance(m, TwoQubitMatrix):
        return m.entries
    matrix = as_square_matrix(m, 4)
    require_hermitian(matrix)
    return matrix


def hermitian_eigenvalues(m: TwoQubitMatrix | np.ndarray) -> np.ndarray:
    """4×4 厄米矩阵的特征值（降序，循环 Jacobi）.

    Args:
        m: 两比特态，或任意 4×4 厄米数组（如部分转置）

    Returns:
        形状 (4,) 的降序实特征值

    Raises:
        DomainError: 非厄米输入
    """
    if isinstance(m, TwoQubitMatrix):
        return m.eigenvalues.copy()
    return jacobi_eigenvalues(_as_hermitian_4x4(m))


def von_neumann_entropy(m: TwoQubitMatrix | np.ndarray) -> float:
    """S = −Σ λ log₂ λ（比特），0·log0 ≡ 0.

    Raises:
        PositivityError: 存在小于 −1e-9 的特征值
    """
    eigenvalues = hermitian_eigenvalues(m)
    clamp_tol = settings.numerics.entropy_clamp_tol
    if eigenvalues[-1] < -clamp_tol:
        raise PositivityError(
            f"eigenvalue {eigenvalues[-1]:.3e} below -{clamp_tol:.0e}; not a valid state"
        )
    positive = eigenvalues[eigenvalues > 0.0]
    entropy = float(-np.sum(positive * np.log2(positive)))
    return min(2.0, max(0.0, entropy))


def bell_state(which: int) -> TwoQubitMatrix:
    """Bell 投影，顺序 (ψ⁻, ψ⁺, φ⁻, φ⁺).

    Raises:
        DomainError: 下标不在 0..3
    """
    if isinstance(which, bool) or not isinstance(which, Integral) or which not in range(4):
        raise DomainError(f"Bell index must be 0..3, got {which!r}")
    amplitudes = _BELL_AMPLITUDES[which]
    return TwoQubitMatrix(0.5 * np.outer(amplitudes, amplitudes.conj()))


def werner_state(alpha: float) -> TwoQubitMatrix:
    """W_α = α|ψ⁻⟩⟨ψ⁻| + (1−α)·1₄/4.

    Raises:
        DomainError: α 不在 [0, 1]
    """
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"Werner alpha must lie in [0, 1], got {alpha}")
    return TwoQubitMatrix(alpha * bell_state(0).entries + (1 - alpha) * IDENTITY_4 / 4)


def local_pauli_conjugate(m: TwoQubitMatrix, axis: PauliAxis) -> TwoQubitMatrix:
    """(σ ⊗ 1₂) m (σ ⊗ 1₂)，作用在第一个比特上."""
    operator = np.kron(axis.matrix, IDENTITY_2)
    return TwoQubitMatrix(operator @ m.entries @ operator)


def partial_transpose(m: TwoQubitMatrix) -> np.ndarray:
    """对第二个比特做部分转置，返回 4×4 厄米数组（一般不半正定）."""
    blocks = m.entries.reshape(2, 2, 2, 2)
    return blocks.transpose(0, 3, 2, 1).reshape(4, 4).copy()


def is_entangled_ppt(m: TwoQubitMatrix) -> bool:
    """Peres–Horodecki 判据：部分转置出现负特征值即纠缠（两比特下充要）."""
    lowest = hermitian_eigenvalues(partial_transpose(m))[-1]
    return bool(lowest < -settings.numerics.psd_tol)
