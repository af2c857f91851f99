"""
实值单变量函数的统一封装，同时承担被积函数 f 与积分子 g 两种角色。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Optional

import numpy as np
from numpy.typing import ArrayLike

from gaussrs.core.exceptions import MissingDerivativeError, NonDifferentiableError
from gaussrs.models.interval import Interval

if TYPE_CHECKING:
    from gaussrs.services.expression import Expr

Evaluator = Callable[[np.ndarray], ArrayLike]


@dataclass(frozen=True)
class RealFunction:
    """可求值的实函数，可选地附带导函数。

    evaluator 接收 float 数组并返回同形状（或可广播）的数组；同一输入总是得到同一输出。
    """

    evaluator: Evaluator
    name: str = "h"
    derivative: Optional[RealFunction] = None

    def __call__(self, x: float) -> float:
        return float(self.evaluate(np.asarray(x, dtype=float)))

    def evaluate(self, xs: ArrayLike) -> np.ndarray:
        points = np.asarray(xs, dtype=float)
        values = np.asarray(self.evaluator(points), dtype=float)
        if values.shape != points.shape:
            values = np.broadcast_to(values, points.shape).copy()
        return values

    def require_derivative(self) -> RealFunction:
        if self.derivative is None:
            raise MissingDerivativeError(f"函数 {self.name} 没有附带导数")
        return self.derivative

    @property
    def has_derivative(self) -> bool:
        return self.derivative is not None

    # 构造

    @classmethod
    def from_expr(cls, expr: Expr, *, name: Optional[str] = None) -> RealFunction:
        """由表达式构造；可微时附带一阶导数（导数本身不再附带导数）。"""
        from gaussrs.services.expression import differentiate, unparse

        label = name or unparse(expr)
        derivative: Optional[RealFunction] = None
        try:
            d_expr = differentiate(expr)
        except NonDifferentiableError:
            d_expr = None
        if d_expr is not None:
            derivative = cls(d_expr.evaluate, name=f"({label})'")
        return cls(expr.evaluate, name=label, derivative=derivative)

    @classmethod
    def from_text(cls, text: str, *, name: Optional[str] = None) -> RealFunction:
        from gaussrs.services.expression_parser import parse

        return cls.from_expr(parse(text), name=name or text.strip())

    @classmethod
    def constant(cls, value: float) -> RealFunction:
        zero = cls(lambda xs: np.zeros_like(xs), name="0")
        return cls(lambda xs: np.full_like(xs, value), name=f"{value:g}", derivative=zero)

    @classmethod
    def identity(cls) -> RealFunction:
        one = cls(lambda xs: np.ones_like(xs), name="1")
        return cls(lambda xs: xs, name="t", derivative=one)

    # 组合

    def pullback(self, iv: Interval) -> RealFunction:
        """h∘φ，φ 把 [−1, 1] 仿射映到 iv；导数按链式法则乘以 (b−a)/2。"""
        mid, half = iv.midpoint, iv.half_width
        derivative: Optional[RealFunction] = None
        if self.derivative is not None:
            inner = self.derivative
            derivative = RealFunction(
                lambda us: inner.evaluate(mid + us * half) * half,
                name=f"({self.name}∘φ)'",
            )
        return RealFunction(
            lambda us: self.evaluate(mid + us * half),
            name=f"{self.name}∘φ",
            derivative=derivative,
        )

    def shifted(self, c: float) -> RealFunction:
        return RealFunction(
            lambda xs: self.evaluate(xs) + c,
            name=f"{self.name}{c:+g}",
            derivative=self.derivative,
        )

    def absolute(self) -> RealFunction:
        return RealFunction(lambda xs: np.abs(self.evaluate(xs)), name=f"|{self.name}|")

    def squared(self) -> RealFunction:
        return RealFunction(lambda xs: self.evaluate(xs) ** 2, name=f"({self.name})^2")

    def times(self, other: RealFunction) -> RealFunction:
        return RealFunction(
            lambda xs: self.evaluate(xs) * other.evaluate(xs),
            name=f"{self.name}·{other.name}",
        )
