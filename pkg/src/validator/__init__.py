"""阈值结果验证模块."""

from .validators import (
    ConstraintBoundaryValidator,
    GridOracleValidator,
    RandomSimplexValidator,
    ValidationPipeline,
    ValidationResult,
    ValidationStatus,
    Validator,
)

__all__ = [
    "ConstraintBoundaryValidator",
    "GridOracleValidator",
    "RandomSimplexValidator",
    "ValidationPipeline",
    "ValidationResult",
    "ValidationStatus",
    "Validator",
]
