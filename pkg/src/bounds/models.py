"""阈值优化结果与曲线扫描表模型."""

import csv
import math
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SweepKind(Enum):
    """扫描曲线类型."""

    FIG1 = "fig1"  # C(p₁)，p₁ ∈ [½, 1]
    FIG2_TWO_BIT = "fig2-two-bit"  # C(α)，两比特信道
    FIG2_ONE_BIT = "fig2-one-bit"  # C′(α)，两个独立单比特信道


class ThresholdResult(BaseModel):
    """最小充分通信量的优化结果.

    Attributes:
        problem: 问题标识（two_bit / two_independent / werner_two_bit / werner_one_bit_pair）
        min_comm: 最小通信量（比特）
        argmin: 最优点的信道参数
        argmin_labels: 参数名
        constraint_value: 最优点处约束函数的值（p₁ 或 ηδ）
        constraint_bound: 约束下界
        evaluations: 目标函数求值次数
    """

    model_config = ConfigDict(frozen=True)

    problem: str = Field(..., description="问题标识")
    min_comm: float = Field(..., ge=0.0, description="最小通信量（比特）")
    argmin: tuple[float, ...] = Field(..., description="最优信道参数")
    argmin_labels: tuple[str, ...] = Field(..., description="参数名")
    constraint_value: float = Field(..., description="最优点处的约束值")
    constraint_bound: float = Field(..., description="约束下界")
    evaluations: int = Field(default=0, ge=0, description="目标函数求值次数")

    @model_validator(mode="after")
    def _labels_match(self) -> "ThresholdResult":
        if len(self.argmin) != len(self.argmin_labels):
            raise ValueError("argmin and argmin_labels must have the same length")
        return self

    def as_dict(self) -> dict[str, float]:
        """参数名 → 最优值."""
        return dict(zip(self.argmin_labels, self.argmin, strict=True))


class SweepTable(BaseModel):
    """按 x 严格递增排列的曲线数据.

    Attributes:
        columns: 列名，第一列为 x
        rows: 数据行
    """

    model_config = ConfigDict(frozen=True)

    columns: tuple[str, ...] = Field(..., min_length=2, description="列名")
    rows: tuple[tuple[float, ...], ...] = Field(..., min_length=1, description="数据行")

    @model_validator(mode="after")
    def _check_rows(self) -> "SweepTable":
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row {row} does not match columns {self.columns}")
            if not all(math.isfinite(value) for value in row):
                raise ValueError(f"row {row} contains non-finite values")
        xs = [row[0] for row in self.rows]
        if any(later <= earlier for earlier, later in zip(xs, xs[1:])):
            raise ValueError("x column must be strictly increasing")
        return self

    @property
    def xs(self) -> list[float]:
        """x 列."""
        return [row[0] for row in self.rows]

    def column(self, label: str) -> list[float]:
        """按列名取列."""
        index = self.columns.index(label)
        return [row[index] for row in self.rows]

    def join(self, other: "SweepTable") -> "SweepTable":
        """按相同的 x 列横向拼接."""
        if self.xs != other.xs:
            raise ValueError("cannot join sweep tables with different x columns")
        return SweepTable(
            columns=self.columns + other.columns[1:],
            rows=tuple(a + b[1:] for a, b in zip(self.rows, other.rows, strict=True)),
        )

    def to_csv(self, path: Path, decimals: int = 6) -> None:
        """写出 CSV：逗号分隔、\\n 换行、表头、定点小数.

        数值按 f"{v:.{decimals}f}" 四舍五入而非截断，例如 C(½) = 0.2075187… 写作 0.207519。

        Raises:
            OSError: 路径不可写
        """
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([f"{value:.{decimals}f}" for value in row])
