"""信道随机采样与可拆分随机流.

随机流使用 numpy Generator；子流 j 由 SeedSequence(seed, spawn_key=(j,)) 派生，
只依赖 (seed, j)，与总共派生多少条无关。
"""

import numpy as np

from src.cchannel.models import BitPair, FlipPattern, OneBitChannel, TwoBitChannel
from src.errors import DomainError


def make_rng(seed: int) -> np.random.Generator:
    """由种子创建主随机流."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn_streams(seed: int, count: int, offset: int = 0) -> list[np.random.Generator]:
    """派生相互独立的子流.

    Args:
        seed: 主种子
        count: 子流数量
        offset: 起始子流编号

    Returns:
        子流 offset .. offset+count-1
    """
    if seed < 0:
        raise DomainError(f"seed must be non-negative, got {seed}")
    return [
        np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(offset + j,)))
        for j in range(count)
    ]


def sample_one_bit(ch: OneBitChannel, bit: int, rng: np.random.Generator) -> int:
    """单比特信道传输一次：以概率 z 原样输出."""
    if isinstance(bit, bool) or bit not in (0, 1):
        raise DomainError(f"input must be a bit, got {bit!r}")
    return bit if rng.random() < ch.z else 1 - bit


def sample_flip_patterns(ch: TwoBitChannel, size: int, rng: np.random.Generator) -> np.ndarray:
    """批量抽取翻转模式下标（0..3，对应 p₁..p₄）."""
    return rng.choice(4, size=size, p=np.asarray(ch.probabilities, dtype=float))


def sample_two_bit(ch: TwoBitChannel, pair: BitPair, rng: np.random.Generator) -> BitPair:
    """两比特信道传输一次."""
    pattern = FlipPattern(int(sample_flip_patterns(ch, 1, rng)[0]))
    return pair.flipped(pattern)
