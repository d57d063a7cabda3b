"""蒙特卡洛保真度估计.

样本按固定大小的块划分，块 j 使用由 (seed, j) 派生的独立子流；
各块可并行计算，最后按块编号顺序合并，因此结果与线程数无关。
"""

import logging
import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from src.cchannel.sampling import sample_flip_patterns, spawn_streams
from src.config import settings
from src.errors import DomainError
from src.monitoring import record_samples, track_duration
from src.teleport.maps import NEGATED_COMPONENTS, PATTERN_MASKS
from src.teleport.models import FidelityEstimate, TeleportScenario

logger = logging.getLogger(__name__)

MIN_SAMPLES = 100

BlockSampler = Callable[[np.random.Generator, int], np.ndarray]


@dataclass(frozen=True)
class _BlockMoments:
    count: int
    mean: float
    m2: float

    @classmethod
    def of(cls, scores: np.ndarray) -> "_BlockMoments":
        mean = float(np.mean(scores))
        return cls(count=scores.size, mean=mean, m2=float(np.sum((scores - mean) ** 2)))

    def merge(self, other: "_BlockMoments") -> "_BlockMoments":
        count = self.count + other.count
        delta = other.mean - self.mean
        return _BlockMoments(
            count=count,
            mean=self.mean + delta * other.count / count,
            m2=self.m2 + other.m2 + delta**2 * self.count * other.count / count,
        )


def haar_angles(rng: np.random.Generator, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Bloch 球面均匀采样：cosθ ~ U[−1, 1]，φ ~ U[0, 2π)."""
    cos_theta = rng.uniform(-1.0, 1.0, size)
    phi = rng.uniform(0.0, 2.0 * np.pi, size)
    return cos_theta, phi


def bloch_components(cos_theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """形状 (N, 3) 的单位 Bloch 向量."""
    sin_theta = np.sqrt(np.clip(1.0 - cos_theta**2, 0.0, None))
    return np.stack([sin_theta * np.cos(phi), sin_theta * np.sin(phi), cos_theta], axis=-1)


def branch_scores(
    cos_theta: np.ndarray,
    phi: np.ndarray,
    outcomes: np.ndarray,
    patterns: np.ndarray,
    alpha: float = 1.0,
) -> np.ndarray:
    """已知各次抽样 (输入态, Bell 结果, 翻转模式) 时的协议得分.

    与 teleport_branch 逐次对应：Bob 收到 outcome ⊕ mask，校正后残余误差下标为
    outcome ⊕ received；纯态 ρ 在残余误差 σ 下的得分 Tr(ρσρσ) = 1 − Σ(被取反分量的 n_k²)。
    """
    received = outcomes ^ PATTERN_MASKS[patterns]
    residual = outcomes ^ received
    squares = bloch_components(cos_theta, phi) ** 2
    branch = 1.0 - np.sum(NEGATED_COMPONENTS[residual] * squares, axis=1)
    if alpha == 1.0:
        return branch
    return alpha * branch + (1.0 - alpha) * 0.5


def protocol_scores(scenario: TeleportScenario, rng: np.random.Generator, size: int) -> np.ndarray:
    """向量化地运行 size 次协议，返回每次的得分."""
    cos_theta, phi = haar_angles(rng, size)
    outcomes = rng.integers(0, 4, size)
    patterns = sample_flip_patterns(scenario.channel, size, rng)
    return branch_scores(cos_theta, phi, outcomes, patterns, scenario.alpha)


def run_blocks(
    sampler: BlockSampler,
    samples: int,
    seed: int,
    kind: str,
    workers: int | None = None,
    block_size: int | None = None,
) -> FidelityEstimate:
    """分块运行采样器并合并为 FidelityEstimate.

    Args:
        sampler: (子流, 块大小) → 得分数组
        samples: 总样本数
        seed: 主种子
        kind: 监控标签
        workers: 并行线程数，默认取配置
        block_size: 块大小，默认取配置

    Returns:
        保真度估计
    """
    mc = settings.montecarlo
    workers = mc.workers if workers is None else workers
    block_size = mc.block_size if block_size is None else block_size
    if workers < 1 or block_size < 1:
        raise DomainError(f"workers and block_size must be >= 1, got {workers}, {block_size}")
    n_blocks = math.ceil(samples / block_size)

    def run_block(j: int) -> _BlockMoments:
        size = min(block_size, samples - j * block_size)
        rng = spawn_streams(seed, 1, offset=j)[0]
        return _BlockMoments.of(sampler(rng, size))

    with track_duration(kind):
        with ThreadPoolExecutor(max_workers=workers) as executor:
            blocks = tqdm(
                executor.map(run_block, range(n_blocks)),
                total=n_blocks,
                desc=f"montecarlo[{kind}]",
                disable=not mc.show_progress,
            )
            moments: _BlockMoments | None = None
            for block in blocks:
                moments = block if moments is None else moments.merge(block)

    assert moments is not None
    record_samples(kind, samples)
    variance = moments.m2 / (moments.count - 1) if moments.count > 1 else 0.0
    estimate = FidelityEstimate(
        mean=min(1.0, max(0.0, moments.mean)),
        std_error=math.sqrt(variance / moments.count),
        samples=moments.count,
    )
    logger.info(
        f"✅ 蒙特卡洛完成 [{kind}]: {samples} 样本, "
        f"均值 {estimate.mean:.6f} ± {estimate.std_error:.2e}"
    )
    return estimate


def fidelity_monte_carlo(
    scenario: TeleportScenario,
    samples: int,
    seed: int,
    workers: int | None = None,
    block_size: int | None = None,
) -> FidelityEstimate:
    """对 Haar 随机纯态输入平均协议得分.

    Raises:
        DomainError: samples < 100
    """
    if samples < MIN_SAMPLES:
        raise DomainError(f"samples must be >= {MIN_SAMPLES}, got {samples}")

    def sampler(rng: np.random.Generator, size: int) -> np.ndarray:
        return protocol_scores(scenario, rng, size)

    return run_blocks(
        sampler,
        samples,
        seed,
        kind=scenario.resource.value,
        workers=workers,
        block_size=block_size,
    )
