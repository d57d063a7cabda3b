"""异常层级定义.

所有库内异常都继承自 TeleportError，便于 CLI 统一映射退出码。
"""


class TeleportError(Exception):
    """工具包异常基类."""


class DomainError(TeleportError, ValueError):
    """输入超出定义域（角度、概率、α 等越界，或矩阵不满足不变量）."""


class PositivityError(DomainError):
    """矩阵存在显著为负的特征值."""


class InfeasibleError(DomainError):
    """约束不可满足（例如 α < 1/3 时阈值超过 1）."""


class ContractViolationError(TeleportError):
    """调用方违反了函数契约（例如两个参数都不是纯态）."""


class ConvergenceError(TeleportError, RuntimeError):
    """迭代算法在最大次数内未收敛."""
