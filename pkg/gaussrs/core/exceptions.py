"""
GaussRS 的异常体系。

每个异常携带 ``exit_code``，命令行入口据此映射进程退出码：
1 解析/配置错误，2 定义域/求值/积分错误，3 参照值（oracle）不收敛。
"""

from __future__ import annotations

from typing import Optional


class GaussRSError(Exception):
    """所有 GaussRS 错误的基类。"""

    exit_code: int = 2


class ExprSyntaxError(GaussRSError):
    """表达式语法错误，offset 为出错位置的字节偏移。"""

    exit_code = 1

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message}（字节偏移 {offset}）")
        self.offset = offset


class UnknownIdentifierError(ExprSyntaxError):
    """表达式中出现了未知标识符。"""

    def __init__(self, name: str, offset: int) -> None:
        super().__init__(f"未知标识符 {name!r}", offset)
        self.name = name


class InvalidIntervalError(GaussRSError):
    """区间端点不满足 a < b 或不是有限实数。"""

    exit_code = 1


class ExprDomainError(GaussRSError):
    """表达式在给定点超出定义域，node 为出错节点的文本形式。"""

    def __init__(self, node: str, reason: str) -> None:
        super().__init__(f"节点 {node} 超出定义域: {reason}")
        self.node = node
        self.reason = reason


class NonDifferentiableError(GaussRSError):
    """表达式包含不可微节点（abs）。"""

    def __init__(self, node: str) -> None:
        super().__init__(f"节点 {node} 不可微，无法求导")
        self.node = node


class MissingDerivativeError(GaussRSError):
    """需要导数的运算收到了没有附带导数的函数。"""


class IntegrationError(GaussRSError):
    """自适应积分不收敛、被积函数非有限或超出求值预算。"""


class CoefficientIdentityError(GaussRSError):
    """系数 A、B 不满足 A + B = g(b) − g(a)。"""


class ZeroDenominatorError(GaussRSError):
    """g(b) = g(a)，而误差界的推导需要除以 g(b) − g(a)。"""


class OracleNonConvergenceError(GaussRSError):
    """Riemann–Stieltjes 和式在剖分上限内未收敛，通常意味着 (f, g) 过于粗糙。"""

    exit_code = 3

    def __init__(self, estimate: float, delta: float, n: int, message: Optional[str] = None) -> None:
        super().__init__(message or f"RS 和式在 n={n} 时仍未收敛，最后两次估计相差 {delta:.3e}")
        self.estimate = estimate
        self.delta = delta
        self.n = n
