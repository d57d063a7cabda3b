"""密集编码的 Holevo 量.

把共享的噪声 Bell 态作为密集编码资源：Alice 对自己的比特施加 σ₀..σ₃ 之一，
得到四个等概率的两比特态。其 Holevo χ 等于对称信道互信息 C(p₁)，
说明两种“有噪声的两比特资源”在信息量上等价。
"""

import logging
import math
from collections.abc import Sequence

from src.cchannel import shannon_entropy_distribution
from src.errors import DomainError
from src.qstate import (
    IDENTITY_4,
    PauliAxis,
    TwoQubitMatrix,
    bell_state,
    local_pauli_conjugate,
    von_neumann_entropy,
)

logger = logging.getLogger(__name__)

ENCODING_AXES = (PauliAxis.I, PauliAxis.X, PauliAxis.Y, PauliAxis.Z)


def _require_p1(p1: float) -> None:
    if not (math.isfinite(p1) and 0.25 <= p1 <= 1.0):
        raise DomainError(f"p1 must lie in [1/4, 1], got {p1}")


def dense_coding_ensemble(p1: float) -> list[TwoQubitMatrix]:
    """ρᵢ = (1−p₁)/3·1₄ + (4p₁−1)/3·(σᵢ⊗1)|ψ⁻⟩⟨ψ⁻|(σᵢ⊗1)，i = 0..3.

    Raises:
        DomainError: p₁ 不在 [¼, 1]
    """
    _require_p1(p1)
    singlet = bell_state(0)
    noise = (1.0 - p1) / 3.0
    weight = (4.0 * p1 - 1.0) / 3.0
    return [
        TwoQubitMatrix(noise * IDENTITY_4 + weight * local_pauli_conjugate(singlet, axis).entries)
        for axis in ENCODING_AXES
    ]


def holevo_chi(states: Sequence[TwoQubitMatrix], priors: Sequence[float]) -> float:
    """χ = S(Σ pᵢρᵢ) − Σ pᵢ S(ρᵢ).

    Raises:
        DomainError: 态与先验数量不一致，或先验不是概率分布
    """
    if len(states) != len(priors) or not states:
        raise DomainError(f"got {len(states)} states for {len(priors)} priors")
    if any(p < 0.0 for p in priors) or abs(math.fsum(priors) - 1.0) > 1e-12:
        raise DomainError(f"priors must form a distribution, got {list(priors)}")

    average = TwoQubitMatrix(sum(p * state.entries for p, state in zip(priors, states)))
    chi = von_neumann_entropy(average) - math.fsum(
        p * von_neumann_entropy(state) for p, state in zip(priors, states)
    )
    return max(0.0, chi)


def holevo_quantity(p1: float) -> float:
    """等概率密集编码系综的 χ，等于 C(p₁)."""
    chi = holevo_chi(dense_coding_ensemble(p1), [0.25] * 4)
    logger.debug(f"Holevo χ(p₁={p1}) = {chi:.12f}")
    return chi


def holevo_closed_form(p1: float) -> float:
    """2 − H(p₁, (1−p₁)/3, (1−p₁)/3, (1−p₁)/3)."""
    _require_p1(p1)
    rest = (1.0 - p1) / 3.0
    return min(2.0, max(0.0, 2.0 - shannon_entropy_distribution((p1, rest, rest, rest))))
