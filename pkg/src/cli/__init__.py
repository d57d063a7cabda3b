"""命令行模块."""

from .report import RunReport, render_lines

__all__ = ["RunReport", "render_lines"]
