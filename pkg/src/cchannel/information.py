"""信息论量：Shannon 熵、信道容量与互信息（单位：比特）.

互信息按均匀输入计算：对称信道下均匀输入即为达到容量的输入分布。
"""

import math
from collections.abc import Iterable

import numpy as np

from src.cchannel.models import BitPair, FlipPattern, OneBitChannel, TwoBitChannel
from src.errors import DomainError


def shannon_entropy(p: float) -> float:
    """二元熵 H(p) = −p log₂p − (1−p) log₂(1−p).

    Raises:
        DomainError: p 不在 [0, 1]
    """
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p}")
    return shannon_entropy_distribution((p, 1.0 - p))


def shannon_entropy_distribution(probs: Iterable[float]) -> float:
    """离散分布的熵，0·log0 ≡ 0."""
    values = [float(p) for p in probs]
    if any(p < 0.0 for p in values):
        raise DomainError(f"probabilities must be non-negative, got {values}")
    entropy = -math.fsum(p * math.log2(p) for p in values if p > 0.0)
    return max(0.0, entropy)


def capacity_one_bit(ch: OneBitChannel) -> float:
    """C_z = 1 − H(z)."""
    return min(1.0, max(0.0, 1.0 - shannon_entropy(ch.z)))


def mutual_info_two_bit(ch: TwoBitChannel) -> float:
    """I(X:Y) = 2 + Σ pᵢ log₂ pᵢ（均匀输入）."""
    return min(2.0, max(0.0, 2.0 - shannon_entropy_distribution(ch.probabilities)))


def joint_distribution(ch: TwoBitChannel) -> np.ndarray:
    """均匀输入下的联合分布 P(x, y)，行为输入下标，列为输出下标."""
    joint = np.zeros((4, 4))
    for x in range(4):
        sent = BitPair.from_index(x)
        for pattern in FlipPattern:
            joint[x, sent.flipped(pattern).index] += 0.25 * ch.probability(pattern)
    return joint


def mutual_information_joint(joint: np.ndarray) -> float:
    """H(X) + H(Y) − H(X,Y)."""
    joint = np.asarray(joint, dtype=float)
    return (
        shannon_entropy_distribution(joint.sum(axis=1))
        + shannon_entropy_distribution(joint.sum(axis=0))
        - shannon_entropy_distribution(joint.ravel())
    )
