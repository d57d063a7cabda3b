"""一维优化工具：黄金分割搜索与稠密网格搜索."""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.errors import DomainError

logger = logging.getLogger(__name__)

# 1/φ ≈ 0.618
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MinimizeResult:
    """一维最小化结果.

    Attributes:
        x: 最优点
        value: 最优值
        evaluations: 目标函数求值次数
    """

    x: float
    value: float
    evaluations: int


def golden_section_minimize(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float | None = None,
) -> MinimizeResult:
    """在 [lo, hi] 上最小化单峰函数.

    每轮复用一个内点的函数值，区间长度按 1/φ 收缩，直到不超过 tol。

    Args:
        func: 目标函数
        lo: 区间左端
        hi: 区间右端
        tol: 参数容差，默认取配置

    Returns:
        最小化结果（返回最终区间中点）
    """
    tol = settings.numerics.golden_tol if tol is None else tol
    if hi < lo:
        raise DomainError(f"empty interval [{lo}, {hi}]")

    left = hi - INV_PHI * (hi - lo)
    right = lo + INV_PHI * (hi - lo)
    f_left = func(left)
    f_right = func(right)
    evaluations = 2

    while hi - lo > tol:
        if f_left < f_right:
            hi, right, f_right = right, left, f_left
            left = hi - INV_PHI * (hi - lo)
            f_left = func(left)
        else:
            lo, left, f_left = left, right, f_right
            right = lo + INV_PHI * (hi - lo)
            f_right = func(right)
        evaluations += 1

    x = (lo + hi) / 2
    value = func(x)
    logger.debug(f"黄金分割收敛: x={x:.12f}, f={value:.12f}, 求值 {evaluations + 1} 次")
    return MinimizeResult(x=x, value=value, evaluations=evaluations + 1)


def grid_minimize(
    func: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    points: int,
) -> MinimizeResult:
    """稠密网格暴力搜索（func 须支持数组输入）."""
    if points < 2:
        raise DomainError(f"grid needs at least 2 points, got {points}")
    grid = np.linspace(lo, hi, points)
    values = np.asarray(func(grid), dtype=float)
    best = int(np.argmin(values))
    return MinimizeResult(x=float(grid[best]), value=float(values[best]), evaluations=points)
