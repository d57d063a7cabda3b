"""通信量曲线扫描."""

import logging

import numpy as np

from src.bounds.models import SweepKind, SweepTable
from src.bounds.thresholds import cost_curve_two_bit, werner_cost_one_bit_pair, werner_cost_two_bit
from src.errors import DomainError

logger = logging.getLogger(__name__)

# α = ⅓ 处阈值恰为 1，曲线斜率发散；从 ⅓ 右侧略偏处起扫
WERNER_SWEEP_START = 1.0 / 3.0 + 1e-6

_SWEEPS = {
    SweepKind.FIG1: (0.5, ("p1", "comm_bits"), cost_curve_two_bit),
    SweepKind.FIG2_TWO_BIT: (WERNER_SWEEP_START, ("alpha", "comm_two_bit"), werner_cost_two_bit),
    SweepKind.FIG2_ONE_BIT: (
        WERNER_SWEEP_START,
        ("alpha", "comm_one_bit_pair"),
        werner_cost_one_bit_pair,
    ),
}


def sweep(kind: SweepKind | str, n_points: int) -> SweepTable:
    """在 [起点, 1] 上等距取 n_points 个点计算曲线.

    Args:
        kind: fig1 / fig2-two-bit / fig2-one-bit
        n_points: 点数，至少 2

    Returns:
        x 严格递增的扫描表

    Raises:
        DomainError: 未知曲线或点数不足
    """
    try:
        kind = SweepKind(kind)
    except ValueError as e:
        raise DomainError(f"unknown sweep kind {kind!r}") from e
    if n_points < 2:
        raise DomainError(f"sweep needs at least 2 points, got {n_points}")

    start, columns, curve = _SWEEPS[kind]
    xs = np.linspace(start, 1.0, n_points)
    rows = tuple((float(x), curve(float(x))) for x in xs)
    logger.debug(f"扫描 {kind.value}: {n_points} 点, 区间 [{start:.6f}, 1]")
    return SweepTable(columns=columns, rows=rows)


def werner_sweep(n_points: int) -> SweepTable:
    """C(α) 与 C′(α) 合并为一张表."""
    return sweep(SweepKind.FIG2_TWO_BIT, n_points).join(sweep(SweepKind.FIG2_ONE_BIT, n_points))
