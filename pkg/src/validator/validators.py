"""阈值结果的独立验证."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from src.bounds.models import ThresholdResult
from src.bounds.thresholds import (
    ONE_BIT_PAIR_LABELS,
    TWO_BIT_LABELS,
    one_bit_pair_cost_batch,
    two_bit_cost_batch,
)
from src.cchannel import make_rng


class ValidationStatus(Enum):
    """验证状态."""

    PASSED = "PASSED"
    WARNING = "WARNING"
    FAILED = "FAILED"


@dataclass
class ValidationResult:
    """验证结果.

    Attributes:
        status: 验证状态
        check_type: 检查类型
        message: 验证消息
        suggestion: 改进建议（可选）
    """

    status: ValidationStatus
    check_type: str
    message: str
    suggestion: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """转换为字典."""
        return {
            "status": self.status.value,
            "check_type": self.check_type,
            "message": self.message,
            "suggestion": self.suggestion,
        }


class Validator(ABC):
    """验证器基类."""

    @abstractmethod
    def validate(self, result: ThresholdResult) -> ValidationResult:
        """验证优化结果.

        Args:
            result: 阈值优化结果

        Returns:
            验证结果
        """

    @property
    def name(self) -> str:
        """获取验证器名称."""
        return self.__class__.__name__


def _unsupported(check_type: str, result: ThresholdResult) -> ValidationResult:
    return ValidationResult(
        status=ValidationStatus.WARNING,
        check_type=check_type,
        message=f"不支持的参数形式 {result.argmin_labels}",
    )


class ConstraintBoundaryValidator(Validator):
    """最优点应落在约束边界上，且是合法信道."""

    def __init__(self, tol: float = 1e-6) -> None:
        self.tol = tol

    def validate(self, result: ThresholdResult) -> ValidationResult:
        """检查约束值与下界之差."""
        gap = result.constraint_value - result.constraint_bound
        if gap < -self.tol:
            return ValidationResult(
                status=ValidationStatus.FAILED,
                check_type="constraint_boundary",
                message=f"最优点不可行：约束值低于下界 {-gap:.3e}",
            )
        if gap > self.tol:
            return ValidationResult(
                status=ValidationStatus.FAILED,
                check_type="constraint_boundary",
                message=f"最优点偏离约束边界 {gap:.3e}",
                suggestion="目标函数在可行域内应单调，检查优化区间",
            )
        if result.argmin_labels == TWO_BIT_LABELS and abs(sum(result.argmin) - 1.0) > 1e-9:
            return ValidationResult(
                status=ValidationStatus.FAILED,
                check_type="constraint_boundary",
                message=f"最优信道概率和为 {sum(result.argmin):.12f}",
            )
        return ValidationResult(
            status=ValidationStatus.PASSED,
            check_type="constraint_boundary",
            message=f"最优点位于边界（偏差 {gap:.1e}）",
        )


class GridOracleValidator(Validator):
    """在降维后的一维问题上做稠密网格搜索，与优化结果比对."""

    def __init__(self, points: int = 100_001, tol: float = 1e-4) -> None:
        self.points = points
        self.tol = tol

    def _grid_minimum(self, result: ThresholdResult) -> float | None:
        bound = result.constraint_bound
        grid = np.linspace(bound, 1.0, self.points)
        if result.argmin_labels == TWO_BIT_LABELS:
            rest = (1.0 - grid) / 3.0
            costs = two_bit_cost_batch(np.stack([grid, rest, rest, rest], axis=-1))
        elif result.argmin_labels == ONE_BIT_PAIR_LABELS:
            costs = one_bit_pair_cost_batch(grid, np.minimum(1.0, bound / grid))
        else:
            return None
        return float(np.min(costs))

    def validate(self, result: ThresholdResult) -> ValidationResult:
        """比较网格最小值."""
        grid_min = self._grid_minimum(result)
        if grid_min is None:
            return _unsupported("grid_oracle", result)
        deviation = abs(grid_min - result.min_comm)
        if deviation > self.tol:
            return ValidationResult(
                status=ValidationStatus.FAILED,
                check_type="grid_oracle",
                message=f"网格最小值 {grid_min:.8f} 与优化结果 {result.min_comm:.8f} 相差 {deviation:.2e}",
            )
        return ValidationResult(
            status=ValidationStatus.PASSED,
            check_type="grid_oracle",
            message=f"{self.points} 点网格一致（偏差 {deviation:.1e}）",
        )


class RandomSimplexValidator(Validator):
    """随机抽取可行信道，确认没有比报告最优值更小的通信量."""

    def __init__(self, samples: int = 1_000_000, seed: int = 0, tol: float = 1e-6) -> None:
        self.samples = samples
        self.seed = seed
        self.tol = tol

    def _random_costs(self, result: ThresholdResult) -> np.ndarray | None:
        rng = make_rng(self.seed)
        bound = result.constraint_bound
        if result.argmin_labels == TWO_BIT_LABELS:
            p1 = rng.uniform(bound, 1.0, self.samples)
            shares = rng.dirichlet(np.ones(3), self.samples)
            probs = np.column_stack([p1, shares * (1.0 - p1)[:, None]])
            return two_bit_cost_batch(probs)
        if result.argmin_labels == ONE_BIT_PAIR_LABELS:
            eta = rng.uniform(bound, 1.0, self.samples)
            delta = rng.uniform(bound / eta, 1.0)
            return one_bit_pair_cost_batch(eta, delta)
        return None

    def validate(self, result: ThresholdResult) -> ValidationResult:
        """检查随机可行点的最小通信量."""
        costs = self._random_costs(result)
        if costs is None:
            return _unsupported("random_simplex", result)
        best = float(np.min(costs))
        if best < result.min_comm - self.tol:
            return ValidationResult(
                status=ValidationStatus.FAILED,
                check_type="random_simplex",
                message=f"随机可行点达到 {best:.8f}，低于报告最优值 {result.min_comm:.8f}",
                suggestion="优化可能陷入局部极小",
            )
        return ValidationResult(
            status=ValidationStatus.PASSED,
            check_type="random_simplex",
            message=f"{self.samples} 个随机可行信道均不低于最优值（最小 {best:.6f}）",
        )


class ValidationPipeline:
    """验证流水线.

    运行多个验证器并汇总结果。
    """

    # 标准验证器集
    STANDARD_VALIDATORS = [
        ConstraintBoundaryValidator(),
        GridOracleValidator(),
        RandomSimplexValidator(),
    ]

    def __init__(self, validators: list[Validator] | None = None) -> None:
        """初始化验证流水线.

        Args:
            validators: 验证器列表（默认使用标准验证器集）
        """
        self.validators = validators or self.STANDARD_VALIDATORS.copy()

    def validate(self, result: ThresholdResult) -> list[ValidationResult]:
        """运行所有验证器.

        Args:
            result: 阈值优化结果

        Returns:
            验证结果列表
        """
        results = []
        for validator in self.validators:
            try:
                results.append(validator.validate(result))
            except Exception as e:
                # 验证器失败时返回 WARNING
                results.append(
                    ValidationResult(
                        status=ValidationStatus.WARNING,
                        check_type=validator.name,
                        message=f"验证失败: {e}",
                    )
                )

        return results

    def has_failed(self, results: list[ValidationResult]) -> bool:
        """检查是否有 FAILED 状态."""
        return any(r.status == ValidationStatus.FAILED for r in results)

    def has_warning(self, results: list[ValidationResult]) -> bool:
        """检查是否有 WARNING 状态."""
        return any(r.status == ValidationStatus.WARNING for r in results)
