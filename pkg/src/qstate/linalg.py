"""2×2 / 4×4 厄米矩阵的小型线性代数工具.

特征值通过循环 Jacobi 旋转求得：每轮扫描依次消去所有上三角非对角元，
直到非对角 Frobenius 范数低于阈值。
"""

import logging
import math

import numpy as np

from src.config import settings
from src.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)


def as_square_matrix(entries: object, dim: int) -> np.ndarray:
    """转换为只读的 complex128 方阵副本.

    Args:
        entries: 任意可转为数组的矩阵
        dim: 期望维度

    Returns:
        dim×dim 的只读复矩阵

    Raises:
        DomainError: 形状不符或含非有限值
    """
    matrix = np.array(entries, dtype=np.complex128)
    if matrix.shape != (dim, dim):
        raise DomainError(f"expected a {dim}x{dim} matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise DomainError("matrix entries must be finite")
    matrix.setflags(write=False)
    return matrix


def hermitian_residual(matrix: np.ndarray) -> float:
    """返回 max|A - A^H|."""
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def require_hermitian(matrix: np.ndarray, tol: float | None = None) -> None:
    """检查厄米性.

    Raises:
        DomainError: 非厄米
    """
    tol = settings.numerics.hermitian_tol if tol is None else tol
    residual = hermitian_residual(matrix)
    if residual > tol:
        raise DomainError(f"matrix is not Hermitian: max|A - A^H| = {residual:.3e} > {tol:.0e}")


def eigenvalues_2x2(matrix: np.ndarray) -> tuple[float, float]:
    """2×2 厄米矩阵的闭式特征值（降序）."""
    a = matrix[0, 0].real
    d = matrix[1, 1].real
    b = abs(matrix[0, 1])
    half_trace = (a + d) / 2
    radius = math.hypot((a - d) / 2, b)
    return half_trace + radius, half_trace - radius


def off_diagonal_norm(matrix: np.ndarray) -> float:
    """非对角元的 Frobenius 范数."""
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def _rotate(matrix: np.ndarray, p: int, q: int) -> None:
    """原地消去 matrix[p, q].

    先用对角相位把 a_pq 变为实数 |a_pq|，再做实对称 Jacobi 旋转。
    """
    apq = matrix[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return
    phase = np.conj(apq / magnitude)

    theta = (matrix[q, q].real - matrix[p, p].real) / (2.0 * magnitude)
    t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
    if theta < 0:
        t = -t
    c = 1.0 / math.hypot(t, 1.0)
    s = t * c

    rotation = np.eye(matrix.shape[0], dtype=np.complex128)
    rotation[p, p] = c
    rotation[p, q] = s
    rotation[q, p] = -s * phase
    rotation[q, q] = c * phase
    matrix[:] = rotation.conj().T @ matrix @ rotation


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tol: float | None = None,
    max_sweeps: int | None = None,
) -> np.ndarray:
    """循环 Jacobi 法求厄米矩阵特征值.

    Args:
        matrix: 厄米方阵（调用方负责厄米性检查）
        tol: 非对角 Frobenius 范数阈值，默认取配置
        max_sweeps: 最大扫描轮数，默认取配置

    Returns:
        降序排列的实特征值

    Raises:
        ConvergenceError: 超过最大扫描轮数仍未收敛
    """
    tol = settings.numerics.jacobi_tol if tol is None else tol
    max_sweeps = settings.numerics.jacobi_max_sweeps if max_sweeps is None else max_sweeps

    work = np.array(matrix, dtype=np.complex128)
    n = work.shape[0]
    for sweep in range(max_sweeps + 1):
        residual = off_diagonal_norm(work)
        if residual < tol:
            logger.debug(f"Jacobi 收敛: {sweep} 轮, 残差 {residual:.2e}")
            return np.sort(work.diagonal().real)[::-1]
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, p, q)

    raise ConvergenceError(
        f"Jacobi eigensolver did not converge in {max_sweeps} sweeps "
        f"(off-diagonal norm {off_diagonal_norm(work):.3e})"
    )
