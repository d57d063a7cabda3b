"""命令行运行报告."""

import math

from pydantic import BaseModel, Field, field_validator

Scalar = bool | int | float | str

FAILED = "FAILED"
PASSED = "PASSED"


class RunReport(BaseModel):
    """一次命令运行的结果.

    Attributes:
        command: 命令名
        inputs: 回显的输入参数
        outputs: 按名称列出的标量结果（比特 / 保真度 / 校验状态）
        seed: 随机种子（确定性命令为 None）
        wall_time: 运行耗时（秒）
    """

    command: str = Field(..., description="命令名")
    inputs: dict[str, Scalar | None] = Field(default_factory=dict, description="输入参数")
    outputs: dict[str, Scalar] = Field(default_factory=dict, description="输出结果")
    seed: int | None = Field(default=None, description="随机种子")
    wall_time: float = Field(default=0.0, ge=0.0, description="运行耗时（秒）")

    @field_validator("outputs")
    @classmethod
    def _finite_outputs(cls, outputs: dict[str, Scalar]) -> dict[str, Scalar]:
        for key, value in outputs.items():
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"output {key!r} is not finite: {value}")
        return outputs

    @property
    def failed_checks(self) -> list[str]:
        """取值为 FAILED 的输出项."""
        return [key for key, value in self.outputs.items() if value == FAILED]


def _format_value(value: Scalar | None, decimals: int) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


def render_lines(report: RunReport, decimals: int = 5, timing: bool = False) -> list[str]:
    """key: value 形式的文本输出.

    wall_time 仅在 timing 为真时输出，保证同种子重复运行的标准输出逐字节一致。
    """
    lines = [f"command: {report.command}"]
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    lines.extend(f"{key}: {_format_value(value, decimals)}" for key, value in report.inputs.items())
    lines.extend(
        f"{key}: {_format_value(value, decimals)}" for key, value in report.outputs.items()
    )
    if timing:
        lines.append(f"wall_time: {report.wall_time:.3f}")
    return lines
