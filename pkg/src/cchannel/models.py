"""经典噪声信道数据模型.

构造时即校验不变量，违反时直接拒绝，不做重新归一化。
"""

import math
from dataclasses import dataclass, field
from enum import IntEnum
from numbers import Real

from src.config import settings
from src.errors import DomainError


class FlipPattern(IntEnum):
    """两比特信道的翻转模式，取值即 (p₁, p₂, p₃, p₄) 的下标."""

    INTACT = 0  # 两比特均完好
    FLIP_A = 1  # 第一比特翻转
    FLIP_B = 2  # 第二比特翻转
    FLIP_BOTH = 3  # 两比特均翻转

    @property
    def flips_a(self) -> bool:
        """是否翻转第一比特."""
        return self in (FlipPattern.FLIP_A, FlipPattern.FLIP_BOTH)

    @property
    def flips_b(self) -> bool:
        """是否翻转第二比特."""
        return self in (FlipPattern.FLIP_B, FlipPattern.FLIP_BOTH)

    @property
    def mask(self) -> int:
        """作用在 BitPair.index 上的异或掩码."""
        return 2 * int(self.flips_a) + int(self.flips_b)


@dataclass(frozen=True)
class OneBitChannel:
    """二元对称信道：输入以概率 z 原样到达，以 1−z 翻转.

    Attributes:
        z: 直通概率，½ ≤ z ≤ 1
    """

    z: float

    def __post_init__(self) -> None:
        if not (isinstance(self.z, Real) and math.isfinite(self.z)):
            raise DomainError(f"OneBitChannel z must be a finite real, got {self.z!r}")
        if not 0.5 <= self.z <= 1.0:
            raise DomainError(f"OneBitChannel requires 1/2 <= z <= 1, got z = {self.z}")


@dataclass(frozen=True)
class TwoBitChannel:
    """两比特联合噪声信道.

    Attributes:
        p1: 两比特均完好的概率
        p2: 仅第一比特翻转的概率
        p3: 仅第二比特翻转的概率
        p4: 两比特均翻转的概率
        sum_tol: 概率和容差（默认取配置）
    """

    p1: float
    p2: float
    p3: float
    p4: float
    sum_tol: float | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        for name, value in zip(("p1", "p2", "p3", "p4"), self.probabilities, strict=True):
            if not (isinstance(value, Real) and math.isfinite(value)):
                raise DomainError(f"TwoBitChannel {name} must be a finite real, got {value!r}")
            if value < 0.0:
                raise DomainError(f"TwoBitChannel requires {name} >= 0, got {value}")
        tol = settings.numerics.probability_sum_tol if self.sum_tol is None else self.sum_tol
        total = math.fsum(self.probabilities)
        if abs(total - 1.0) > tol:
            raise DomainError(
                f"TwoBitChannel probabilities must sum to 1 within {tol:.0e}, got {total:.15g}"
            )

    @property
    def probabilities(self) -> tuple[float, float, float, float]:
        """(p₁, p₂, p₃, p₄)."""
        return (self.p1, self.p2, self.p3, self.p4)

    def probability(self, pattern: FlipPattern) -> float:
        """某一翻转模式的概率."""
        return self.probabilities[pattern]


@dataclass(frozen=True)
class BitPair:
    """两比特消息 (a, b).

    Attributes:
        a: 第一比特（x 比特）
        b: 第二比特（z 比特）
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        for name, value in (("a", self.a), ("b", self.b)):
            if isinstance(value, bool) or value not in (0, 1):
                raise DomainError(f"BitPair.{name} must be 0 or 1, got {value!r}")

    @property
    def index(self) -> int:
        """2a + b."""
        return 2 * self.a + self.b

    @classmethod
    def from_index(cls, index: int) -> "BitPair":
        """由 0..3 的下标构造."""
        if index not in range(4):
            raise DomainError(f"BitPair index must be 0..3, got {index!r}")
        return cls(a=index >> 1, b=index & 1)

    def flipped(self, pattern: FlipPattern) -> "BitPair":
        """按翻转模式翻转."""
        return BitPair.from_index(self.index ^ pattern.mask)


def product_channel(ch_eta: OneBitChannel, ch_delta: OneBitChannel) -> TwoBitChannel:
    """两个独立单比特信道的联合：第一比特经 C_η，第二比特经 C_δ.

    Returns:
        (ηδ, (1−η)δ, η(1−δ), (1−η)(1−δ))
    """
    eta, delta = ch_eta.z, ch_delta.z
    return TwoBitChannel(
        p1=eta * delta,
        p2=(1 - eta) * delta,
        p3=eta * (1 - delta),
        p4=(1 - eta) * (1 - delta),
    )


def isotropic_channel(p1: float) -> TwoBitChannel:
    """p₂ = p₃ = p₄ = (1−p₁)/3 的对称信道.

    Raises:
        DomainError: p₁ 不在 [¼, 1]
    """
    if not 0.25 <= p1 <= 1.0:
        raise DomainError(f"isotropic channel requires 1/4 <= p1 <= 1, got {p1}")
    rest = (1 - p1) / 3
    return TwoBitChannel(p1=p1, p2=rest, p3=rest, p4=rest)
