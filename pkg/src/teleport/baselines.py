"""不使用纠缠的经典基线.

- 直接猜测：Bob 固定制备 |0⟩（或 |1⟩），平均保真度 ½。
- 测量-制备（Popescu 方案）：Alice 沿 σ_z 测量并告知结果，Bob 制备对应本征态，
  单态成功率 cos⁴(θ/2) + sin⁴(θ/2)，球面平均 ⅔。
"""

import math

import numpy as np

from src.errors import DomainError
from src.teleport.models import CLASSICAL_FIDELITY, GUESS_FIDELITY, FidelityEstimate
from src.teleport.montecarlo import MIN_SAMPLES, haar_angles, run_blocks


def classical_guess_fidelity() -> float:
    """猜测方案的保真度 ½."""
    return GUESS_FIDELITY


def popescu_classical_fidelity() -> float:
    """测量-制备方案的保真度 ⅔."""
    return CLASSICAL_FIDELITY


def popescu_success(theta: float) -> float:
    """极角为 θ 的输入在测量-制备方案下的成功率.

    Raises:
        DomainError: θ 不在 [0, π]
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta}")
    return math.cos(theta / 2) ** 4 + math.sin(theta / 2) ** 4


def _require_samples(samples: int) -> None:
    if samples < MIN_SAMPLES:
        raise DomainError(f"samples must be >= {MIN_SAMPLES}, got {samples}")


def guess_fidelity_monte_carlo(samples: int, seed: int, guess: int = 0) -> FidelityEstimate:
    """蒙特卡洛验证猜测方案：得分 |⟨guess|φ⟩|² = (1 ± cosθ)/2."""
    _require_samples(samples)
    if guess not in (0, 1):
        raise DomainError(f"guess must be 0 or 1, got {guess!r}")
    sign = 1.0 if guess == 0 else -1.0

    def sampler(rng: np.random.Generator, size: int) -> np.ndarray:
        cos_theta, _ = haar_angles(rng, size)
        return 0.5 * (1.0 + sign * cos_theta)

    return run_blocks(sampler, samples, seed, kind="guess")


def popescu_fidelity_monte_carlo(samples: int, seed: int) -> FidelityEstimate:
    """蒙特卡洛模拟测量-制备方案：逐次抽取 σ_z 测量结果."""
    _require_samples(samples)

    def sampler(rng: np.random.Generator, size: int) -> np.ndarray:
        cos_theta, _ = haar_angles(rng, size)
        up_probability = 0.5 * (1.0 + cos_theta)
        measured_up = rng.random(size) < up_probability
        return np.where(measured_up, up_probability, 1.0 - up_probability)

    return run_blocks(sampler, samples, seed, kind="popescu")
