"""隐形传态输出映射与解析保真度.

标准协议下，经典比特的翻转在 Bob 端留下残余 Pauli 误差：
第一比特翻转 → σ_x，第二比特翻转 → σ_z，两者均翻转 → σ_y。
"""

import logging

import numpy as np

from src.cchannel.models import FlipPattern, TwoBitChannel
from src.errors import DomainError
from src.qstate import DensityMatrix, PauliAxis, pure_states_batch
from src.teleport.models import CLASSICAL_FIDELITY

logger = logging.getLogger(__name__)

# 以 BitPair.index = 2a + b 为下标
CORRECTION_AXES: tuple[PauliAxis, ...] = (PauliAxis.I, PauliAxis.Z, PauliAxis.X, PauliAxis.Y)

ERROR_AXES: dict[FlipPattern, PauliAxis] = {
    pattern: CORRECTION_AXES[pattern.mask] for pattern in FlipPattern
}

# 以 FlipPattern 为下标的异或掩码
PATTERN_MASKS = np.array([pattern.mask for pattern in FlipPattern])
# 以残余误差下标为行，1 表示该 Bloch 分量被 σρσ 取反
NEGATED_COMPONENTS = np.array(
    [[(1 - sign) // 2 for sign in axis.bloch_signs] for axis in CORRECTION_AXES],
    dtype=float,
)


def _require_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"Werner alpha must lie in [0, 1], got {alpha}")


def output_state(rho_in: DensityMatrix, ch: TwoBitChannel) -> DensityMatrix:
    """ρ′ = p₁ρ + p₂σ_xρσ_x + p₃σ_zρσ_z + p₄σ_yρσ_y."""
    total = np.zeros((2, 2), dtype=np.complex128)
    for pattern, axis in ERROR_AXES.items():
        sigma = axis.matrix
        total += ch.probability(pattern) * (sigma @ rho_in.entries @ sigma)
    return DensityMatrix(total)


def bloch_contraction(ch: TwoBitChannel) -> tuple[float, float, float]:
    """输出映射对 Bloch 分量的收缩系数 (λx, λy, λz)."""
    factors = np.zeros(3)
    for pattern, axis in ERROR_AXES.items():
        factors += ch.probability(pattern) * np.asarray(axis.bloch_signs, dtype=float)
    return (float(factors[0]), float(factors[1]), float(factors[2]))


def is_isotropic(ch: TwoBitChannel, tol: float = 1e-12) -> bool:
    """输出映射是否各向同性（λx = λy = λz，等价于 p₂ = p₃ = p₄）."""
    factors = bloch_contraction(ch)
    return max(factors) - min(factors) <= tol


def fidelity_from_contraction(factors: tuple[float, float, float]) -> float:
    """F = ½ + (λx + λy + λz)/6（球面平均 ⟨n_k²⟩ = ⅓）."""
    return 0.5 + sum(factors) / 6.0


def fidelity_exact(ch: TwoBitChannel) -> float:
    """F = (1 + 2p₁)/3."""
    return (1.0 + 2.0 * ch.p1) / 3.0


def fidelity_exact_werner(alpha: float, ch: TwoBitChannel) -> float:
    """F = (3 − α + 4αp₁)/6.

    Raises:
        DomainError: α 不在 [0, 1]
    """
    _require_alpha(alpha)
    if alpha == 1.0:
        return fidelity_exact(ch)
    return (3.0 - alpha + 4.0 * alpha * ch.p1) / 6.0


def noiseless_werner_fidelity(alpha: float) -> float:
    """无噪声经典信道下 Werner 资源的保真度 (1 + α)/2."""
    _require_alpha(alpha)
    return (1.0 + alpha) / 2.0


def is_nonclassical(fidelity: float) -> bool:
    """保真度是否严格超过经典极限 ⅔."""
    return fidelity > CLASSICAL_FIDELITY


def _simpson_weights(intervals: int, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    nodes = np.linspace(lo, hi, intervals + 1)
    weights = np.ones(intervals + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    weights *= (hi - lo) / (3.0 * intervals)
    return nodes, weights


def fidelity_quadrature_oracle(ch: TwoBitChannel, grid_n: int) -> float:
    """对球面均匀测度数值积分 ⟨Tr[ρ·ρ′]⟩.

    网格在 (cosθ, φ) 上均匀：cosθ 方向用复合 Simpson 公式，
    φ 方向用周期矩形公式。被积函数由矩阵运算逐点求值，不依赖 Bloch 收缩公式。

    Args:
        ch: 两比特信道
        grid_n: 每个方向的网格点数（≥ 8）

    Returns:
        平均保真度

    Raises:
        DomainError: grid_n < 8
    """
    if grid_n < 8:
        raise DomainError(f"grid_n must be >= 8, got {grid_n}")
    intervals = grid_n if grid_n % 2 == 0 else grid_n + 1
    cos_nodes, cos_weights = _simpson_weights(intervals, -1.0, 1.0)
    phi_nodes = np.arange(grid_n) * (2.0 * np.pi / grid_n)
    phi_weight = 2.0 * np.pi / grid_n

    cos_grid, phi_grid = np.meshgrid(cos_nodes, phi_nodes, indexing="ij")
    states = pure_states_batch(cos_grid.ravel(), phi_grid.ravel())

    outputs = np.zeros_like(states)
    for pattern, axis in ERROR_AXES.items():
        sigma = axis.matrix
        outputs += ch.probability(pattern) * (sigma @ states @ sigma)
    scores = np.einsum("nij,nji->n", states, outputs).real.reshape(cos_grid.shape)

    weights = np.outer(cos_weights, np.full(grid_n, phi_weight))
    value = float(np.sum(weights * scores) / (4.0 * np.pi))
    logger.debug(f"求积保真度 grid_n={grid_n}: {value:.12f}")
    return value
