from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from gaussrs.core.exceptions import InvalidIntervalError


@dataclass(frozen=True, slots=True)
class Interval:
    """闭区间 [a, b]，要求 a < b 且两端均为有限实数。"""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidIntervalError(f"区间端点必须是有限实数: [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise InvalidIntervalError(f"区间要求 a < b，收到 [{self.a}, {self.b}]")

    @classmethod
    def canonical(cls) -> Interval:
        return cls(-1.0, 1.0)

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def half_width(self) -> float:
        return (self.b - self.a) / 2

    @property
    def midpoint(self) -> float:
        return (self.a + self.b) / 2

    def from_canonical(self, u: float) -> float:
        """仿射映射 φ(u) = (a+b)/2 + u·(b−a)/2，把 [−1, 1] 映到 [a, b]。"""
        return self.midpoint + u * self.half_width

    def grid(self, n: int) -> np.ndarray:
        """n 段等距剖分的 n + 1 个节点，两端严格等于 a 与 b。"""
        points = np.linspace(self.a, self.b, n + 1)
        points[0], points[-1] = self.a, self.b
        return points

    def split(self, n: int) -> list[Interval]:
        """等宽切分为 n 个子区间，相邻子区间共享同一个浮点端点。"""
        if n < 1:
            raise ValueError("切分段数必须 ≥ 1")
        edges = [self.a + (self.b - self.a) * i / n for i in range(n)] + [self.b]
        return [Interval(edges[i], edges[i + 1]) for i in range(n)]

    def __str__(self) -> str:
        return f"[{self.a:g}, {self.b:g}]"
