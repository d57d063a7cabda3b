"""最小充分通信量.

把“隐形传态保真度超过经典极限 ⅔”这一要求翻译为信道约束，再在满足约束的信道中
最小化互信息：

- 两比特信道：F = (1 + 2p₁)/3 ≥ ⅔ ⇔ p₁ ≥ ½，最优点 (½, ⅙, ⅙, ⅙)。
- 两个独立单比特信道：ηδ ≥ ½，最优点 η = δ = 1/√2。
- Werner 资源：保真度约束变为 p₁ ≥ (1+α)/(4α)，α < ⅓ 时无解。
"""

import logging
import math

import numpy as np

from src.bounds.models import ThresholdResult
from src.bounds.optimize import golden_section_minimize
from src.cchannel import (
    OneBitChannel,
    capacity_one_bit,
    isotropic_channel,
    mutual_info_two_bit,
    shannon_entropy,
    shannon_entropy_distribution,
)
from src.errors import ConvergenceError, DomainError, InfeasibleError
from src.monitoring import record_evaluations

logger = logging.getLogger(__name__)

FIDELITY_P1_BOUND = 0.5
PRODUCT_BOUND = 0.5
WERNER_ENTANGLEMENT_ALPHA = 1.0 / 3.0

# 余量 (p₂, p₃, p₄) 的非对称起点（占 1 − p₁ 的比例）
_REMAINDER_START = (0.6, 0.3, 0.1)
_REMAINDER_PAIRS = ((0, 1), (1, 2), (0, 2))
# 目标在最优点附近呈二次平坦，参数分辨率约 √eps
_BALANCE_TOL = 1e-7
_BALANCE_MAX_CYCLES = 200

TWO_BIT_LABELS = ("p1", "p2", "p3", "p4")
ONE_BIT_PAIR_LABELS = ("eta", "delta")


def _information(probs: tuple[float, ...]) -> float:
    return 2.0 - shannon_entropy_distribution(probs)


def _xlog2x(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    out = np.zeros_like(values)
    positive = values > 0.0
    out[positive] = values[positive] * np.log2(values[positive])
    return out


def two_bit_cost_batch(probs: np.ndarray) -> np.ndarray:
    """批量互信息 2 + Σ pᵢ log₂ pᵢ，probs 形状 (N, 4)."""
    return np.clip(2.0 + _xlog2x(probs).sum(axis=-1), 0.0, 2.0)


def one_bit_pair_cost_batch(eta: np.ndarray, delta: np.ndarray) -> np.ndarray:
    """批量容量之和 (1 − H(η)) + (1 − H(δ))."""
    return np.clip(
        2.0 + _xlog2x(eta) + _xlog2x(1.0 - eta) + _xlog2x(delta) + _xlog2x(1.0 - delta),
        0.0,
        2.0,
    )


def cost_curve_two_bit(p1: float) -> float:
    """对称信道 (p₁, (1−p₁)/3 ×3) 的互信息 C(p₁).

    Raises:
        DomainError: p₁ 不在 [¼, 1]
    """
    return mutual_info_two_bit(isotropic_channel(p1))


def _balance_remainder(p1: float) -> tuple[tuple[float, float, float], int]:
    """固定 p₁，在余量单纯形上逐对做黄金分割，使互信息最小."""
    rest = [(1.0 - p1) * share for share in _REMAINDER_START]
    evaluations = 0
    for _ in range(_BALANCE_MAX_CYCLES):
        previous = list(rest)
        for i, j in _REMAINDER_PAIRS:
            total = rest[i] + rest[j]

            def objective(x: float, i: int = i, j: int = j, total: float = total) -> float:
                trial = list(rest)
                trial[i], trial[j] = x, total - x
                return _information((p1, *trial))

            result = golden_section_minimize(objective, 0.0, total)
            rest[i], rest[j] = result.x, total - result.x
            evaluations += result.evaluations
        if max(abs(a - b) for a, b in zip(rest, previous)) <= _BALANCE_TOL:
            return (rest[0], rest[1], rest[2]), evaluations
    raise ConvergenceError(
        f"remainder balancing did not converge within {_BALANCE_MAX_CYCLES} cycles"
    )


def _min_comm_two_bit(bound: float, problem: str) -> ThresholdResult:
    def symmetric(p1: float) -> float:
        rest = (1.0 - p1) / 3.0
        return _information((p1, rest, rest, rest))

    outer = golden_section_minimize(symmetric, bound, 1.0)
    p1 = outer.x
    rest, inner_evaluations = _balance_remainder(p1)
    evaluations = outer.evaluations + inner_evaluations
    record_evaluations(problem, evaluations)

    result = ThresholdResult(
        problem=problem,
        min_comm=max(0.0, _information((p1, *rest))),
        argmin=(p1, *rest),
        argmin_labels=TWO_BIT_LABELS,
        constraint_value=p1,
        constraint_bound=bound,
        evaluations=evaluations,
    )
    logger.info(f"✅ {problem}: 最小通信量 {result.min_comm:.6f} bit, p₁* = {p1:.8f}")
    return result


def _min_comm_one_bit_pair(bound: float, problem: str) -> ThresholdResult:
    # ηδ = bound 时约束取等，δ = bound/η；δ ≤ 1 要求 η ≥ bound
    def objective(eta: float) -> float:
        delta = min(1.0, bound / eta)
        return 2.0 - shannon_entropy(eta) - shannon_entropy(delta)

    outcome = golden_section_minimize(objective, bound, 1.0)
    eta = outcome.x
    delta = min(1.0, bound / eta)
    record_evaluations(problem, outcome.evaluations)

    result = ThresholdResult(
        problem=problem,
        min_comm=max(0.0, outcome.value),
        argmin=(eta, delta),
        argmin_labels=ONE_BIT_PAIR_LABELS,
        constraint_value=eta * delta,
        constraint_bound=bound,
        evaluations=outcome.evaluations,
    )
    logger.info(f"✅ {problem}: 最小通信量 {result.min_comm:.6f} bit, η* = {eta:.8f}")
    return result


def min_comm_two_bit() -> ThresholdResult:
    """两比特信道上使 F ≥ ⅔ 的最小互信息（≈ 0.20752 bit）."""
    return _min_comm_two_bit(FIDELITY_P1_BOUND, "two_bit")


def min_comm_two_independent() -> ThresholdResult:
    """两个独立单比特信道在 ηδ ≥ ½ 下的最小容量之和（≈ 0.25512 bit）."""
    return _min_comm_one_bit_pair(PRODUCT_BOUND, "two_independent")


def werner_threshold(alpha: float) -> float:
    """Werner 资源下保真度达到 ⅔ 所需的 p₁ 下界 (1+α)/(4α).

    Raises:
        DomainError: α 不在 [0, 1]
        InfeasibleError: α < ⅓，任何信道都无法超过经典极限
    """
    if not math.isfinite(alpha) or not 0.0 <= alpha <= 1.0:
        raise DomainError(f"Werner alpha must lie in [0, 1], got {alpha}")
    if alpha < WERNER_ENTANGLEMENT_ALPHA:
        raise InfeasibleError(
            f"alpha = {alpha} < 1/3: no classical channel reaches fidelity 2/3"
        )
    return min(1.0, (1.0 + alpha) / (4.0 * alpha))


def werner_cost_two_bit(alpha: float) -> float:
    """C(α)：两比特信道的最小通信量."""
    return cost_curve_two_bit(werner_threshold(alpha))


def werner_cost_one_bit_pair(alpha: float) -> float:
    """C′(α) = 2 − 2H(√t)：对称取 η = δ = √t."""
    root = math.sqrt(werner_threshold(alpha))
    return 2.0 * capacity_one_bit(OneBitChannel(z=root))


def min_comm_werner_two_bit(alpha: float) -> ThresholdResult:
    """Werner 资源下两比特信道的数值最优解."""
    return _min_comm_two_bit(werner_threshold(alpha), "werner_two_bit")


def min_comm_werner_one_bit_pair(alpha: float) -> ThresholdResult:
    """Werner 资源下两个独立单比特信道的数值最优解."""
    return _min_comm_one_bit_pair(werner_threshold(alpha), "werner_one_bit_pair")


def werner_entanglement_boundary() -> float:
    """Werner 态可分/纠缠的分界 α = ⅓（与 PPT 判据一致）."""
    return WERNER_ENTANGLEMENT_ALPHA


def isotropic_information(p1: float) -> float:
    """C(p₁) 的闭式表达 2 + p₁log₂p₁ + (1−p₁)log₂((1−p₁)/3)."""
    if not 0.25 <= p1 <= 1.0:
        raise DomainError(f"p1 must lie in [1/4, 1], got {p1}")
    rest = 1.0 - p1
    value = 2.0 + p1 * math.log2(p1)
    if rest > 0.0:
        value += rest * math.log2(rest / 3.0)
    return min(2.0, max(0.0, value))
