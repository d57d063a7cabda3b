"""Prometheus监控指标定义."""

import time
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

from prometheus_client import CollectorRegistry, Counter, Histogram, Info, generate_latest

# 创建自定义Registry（支持多实例）
registry = CollectorRegistry()


# ============================================
# 模拟指标
# ============================================

# 蒙特卡洛样本总数（按模拟类型分类）
protocol_samples = Counter(
    'teleport_protocol_samples_total',
    'Total Monte Carlo samples drawn',
    ['kind'],  # kind: singlet/werner/guess/popescu
    registry=registry
)

# 蒙特卡洛耗时分布
montecarlo_duration = Histogram(
    'teleport_montecarlo_duration_seconds',
    'Monte Carlo estimation duration in seconds',
    ['kind'],
    buckets=(0.01, 0.05, 0.1, 0.25, 0.5, 1.0, 2.5, 5.0, 10.0, 30.0, 60.0),
    registry=registry
)


# ============================================
# 优化器指标
# ============================================

# 目标函数求值次数
optimizer_evaluations = Counter(
    'teleport_optimizer_evaluations_total',
    'Objective evaluations performed by threshold optimizers',
    ['problem'],  # problem: two_bit/two_independent/werner_*
    registry=registry
)


# ============================================
# 命令行指标
# ============================================

cli_commands = Counter(
    'teleport_cli_commands_total',
    'CLI command invocations',
    ['command', 'status'],  # status: ok/invalid_input/self_check_failed/io_error
    registry=registry
)


# ============================================
# 应用信息
# ============================================

app_info = Info(
    'teleport_app',
    'Noisy teleportation toolkit information',
    registry=registry
)

app_info.info({'version': '0.1.0'})


# ============================================
# 辅助函数
# ============================================

def record_samples(kind: str, count: int) -> None:
    """记录蒙特卡洛样本数."""
    protocol_samples.labels(kind=kind).inc(count)


@contextmanager
def track_duration(kind: str) -> Iterator[None]:
    """记录代码块耗时."""
    start = time.perf_counter()
    try:
        yield
    finally:
        montecarlo_duration.labels(kind=kind).observe(time.perf_counter() - start)


def record_evaluations(problem: str, count: int) -> None:
    """记录优化器求值次数."""
    optimizer_evaluations.labels(problem=problem).inc(count)


def record_command(command: str, status: str) -> None:
    """记录命令行调用."""
    cli_commands.labels(command=command, status=status).inc()


def export_metrics(path: Path) -> None:
    """将当前指标以文本格式写入文件.

    Args:
        path: 输出文件路径

    Raises:
        OSError: 文件不可写
    """
    path.write_bytes(generate_latest(registry))
