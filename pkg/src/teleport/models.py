"""隐形传态场景与估计结果模型."""

from dataclasses import dataclass
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from src.cchannel.models import TwoBitChannel
from src.errors import DomainError

# 仅用经典通信可达到的最优保真度
CLASSICAL_FIDELITY = 2.0 / 3.0
# 不通信、直接猜测的保真度
GUESS_FIDELITY = 0.5


class ResourceKind(Enum):
    """共享纠缠资源类型."""

    SINGLET = "singlet"
    WERNER = "werner"


@dataclass(frozen=True)
class TeleportScenario:
    """一次隐形传态实验的配置.

    Attributes:
        resource: 资源类型
        channel: 两比特经典信道（单比特信道对经 product_channel 转换）
        alpha: Werner 参数（singlet 时恒为 1）
    """

    resource: ResourceKind
    channel: TwoBitChannel
    alpha: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"Werner alpha must lie in [0, 1], got {self.alpha}")
        if self.resource is ResourceKind.SINGLET and self.alpha != 1.0:
            raise DomainError("a singlet resource has alpha = 1")

    @classmethod
    def singlet(cls, channel: TwoBitChannel) -> "TeleportScenario":
        """纯单态资源."""
        return cls(resource=ResourceKind.SINGLET, channel=channel)

    @classmethod
    def werner(cls, alpha: float, channel: TwoBitChannel) -> "TeleportScenario":
        """Werner 态资源."""
        return cls(resource=ResourceKind.WERNER, channel=channel, alpha=alpha)

    def closed_form(self) -> float:
        """解析保真度."""
        from src.teleport.maps import fidelity_exact_werner

        return fidelity_exact_werner(self.alpha, self.channel)


class FidelityEstimate(BaseModel):
    """蒙特卡洛保真度估计.

    Attributes:
        mean: 样本均值
        std_error: 标准误（样本标准差 / √样本数）
        samples: 样本数
    """

    model_config = ConfigDict(frozen=True)

    mean: float = Field(..., ge=0.0, le=1.0, description="样本均值")
    std_error: float = Field(..., ge=0.0, description="标准误")
    samples: int = Field(..., ge=1, description="样本数")

    def deviation(self, expected: float) -> float:
        """|mean − expected| 以标准误为单位；标准误为 0 时按精确相等判断."""
        gap = abs(self.mean - expected)
        if self.std_error == 0.0:
            return 0.0 if gap <= 1e-12 else float("inf")
        return gap / self.std_error

    def agrees_with(self, expected: float, band: float = 4.0) -> bool:
        """均值是否落在 expected ± band·std_error 内."""
        return self.deviation(expected) <= band
