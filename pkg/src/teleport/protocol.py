"""标准隐形传态协议的逐次随机模拟.

Bell 测量结果按 (ψ⁻, ψ⁺, φ⁻, φ⁺) 编号，编码为比特对 (x 比特, z 比特)：
ψ⁻→00, ψ⁺→01, φ⁻→10, φ⁺→11。Bob 收到 (a, b) 后施加 X^a Z^b（相位忽略），
因此结果 k 对应的校正轴与其编码比特对的校正轴一致。
"""

from dataclasses import dataclass

import numpy as np

from src.cchannel.models import BitPair
from src.cchannel.sampling import sample_two_bit
from src.qstate import DensityMatrix, PauliAxis, maximally_mixed_qubit, pure_state, trace_fidelity
from src.teleport.maps import CORRECTION_AXES
from src.teleport.models import TeleportScenario

BELL_ENCODING: tuple[BitPair, ...] = tuple(BitPair.from_index(k) for k in range(4))


def encode_outcome(outcome: int) -> BitPair:
    """Bell 结果编号 → 比特对."""
    return BELL_ENCODING[outcome]


def correction_axis(pair: BitPair) -> PauliAxis:
    """Bob 对收到的比特对施加的校正."""
    return CORRECTION_AXES[pair.index]


def residual_axis(sent: BitPair, received: BitPair) -> PauliAxis:
    """校正后残余的 Pauli 误差（X^a Z^b 按比特异或合成）."""
    return CORRECTION_AXES[sent.index ^ received.index]


def _conjugate(matrix: np.ndarray, axis: PauliAxis) -> np.ndarray:
    sigma = axis.matrix
    return sigma @ matrix @ sigma


def bob_conditional_state(rho_in: DensityMatrix, outcome: int, alpha: float = 1.0) -> DensityMatrix:
    """Bell 结果为 outcome 时、校正前 Bob 手中的态.

    单态资源下为 σ_k ρ σ_k；Werner 资源下与 1₂/2 按 α 混合。
    """
    branch = _conjugate(rho_in.entries, correction_axis(encode_outcome(outcome)))
    return DensityMatrix(alpha * branch + (1.0 - alpha) * maximally_mixed_qubit().entries)


def apply_correction(state: DensityMatrix, received: BitPair) -> DensityMatrix:
    """按收到的比特对施加校正."""
    return DensityMatrix(_conjugate(state.entries, correction_axis(received)))


@dataclass(frozen=True)
class ProtocolRun:
    """单次协议运行记录.

    Attributes:
        outcome: Bell 测量结果编号
        sent: Alice 发送的比特对
        received: Bob 收到的比特对
        output: 校正后 Bob 的态
        score: Tr(ρ_in ρ_out)
    """

    outcome: int
    sent: BitPair
    received: BitPair
    output: DensityMatrix
    score: float

    @property
    def residual(self) -> PauliAxis:
        """残余 Pauli 误差."""
        return residual_axis(self.sent, self.received)


def teleport_branch(
    rho_in: DensityMatrix,
    outcome: int,
    received: BitPair,
    alpha: float = 1.0,
) -> ProtocolRun:
    """给定 Bell 结果与 Bob 收到的比特对，确定性地完成一次协议.

    Args:
        rho_in: 待传输的态
        outcome: Bell 测量结果编号
        received: 经信道后 Bob 收到的比特对
        alpha: Werner 参数，单态资源取 1

    Returns:
        单次运行记录
    """
    sent = encode_outcome(outcome)
    output = apply_correction(bob_conditional_state(rho_in, outcome, alpha), received)
    return ProtocolRun(
        outcome=outcome,
        sent=sent,
        received=received,
        output=output,
        score=trace_fidelity(rho_in, output),
    )


def run_protocol(
    theta: float,
    phi: float,
    scenario: TeleportScenario,
    rng: np.random.Generator,
) -> ProtocolRun:
    """端到端运行一次协议并返回完整记录."""
    # 对 Haar 随机输入，四个 Bell 结果的概率恒为 ¼
    outcome = int(rng.integers(4))
    received = sample_two_bit(scenario.channel, encode_outcome(outcome), rng)
    return teleport_branch(pure_state(theta, phi), outcome, received, scenario.alpha)


def simulate_protocol(
    theta: float,
    phi: float,
    scenario: TeleportScenario,
    rng: np.random.Generator,
) -> float:
    """端到端运行一次协议，返回得分 Tr(ρ_in ρ_out)."""
    return run_protocol(theta, phi, scenario, rng).score
