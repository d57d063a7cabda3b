"""监控模块."""

from .metrics import (
    export_metrics,
    record_command,
    record_evaluations,
    record_samples,
    registry,
    track_duration,
)

__all__ = [
    "registry",
    "record_samples",
    "track_duration",
    "record_evaluations",
    "record_command",
    "export_metrics",
]
