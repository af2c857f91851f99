from __future__ import annotations

import math
from dataclasses import dataclass

from gaussrs.core.exceptions import CoefficientIdentityError
from gaussrs.models.interval import Interval


@dataclass(frozen=True, slots=True)
class GaussRSCoefficients:
    """两点 Gauss–Legendre 型 Riemann–Stieltjes 求积的权系数。

    g_mean_integral 是拉回到 [−1, 1] 后积分子 g∘φ 的积分。构造时检查 A + B = g_right − g_left。
    """

    A: float
    B: float
    g_left: float
    g_right: float
    g_mean_integral: float
    interval: Interval
    tol: float

    def __post_init__(self) -> None:
        scale = abs(self.g_left) + abs(self.g_right) + abs(self.g_mean_integral)
        allowed = 10 * self.tol + 64 * math.ulp(1.0) * (1 + scale)
        gap = abs((self.A + self.B) - self.increment)
        if gap > allowed:
            raise CoefficientIdentityError(f"A + B 与 g(b) − g(a) 相差 {gap:.3e}，超过允许值 {allowed:.3e}")

    @property
    def increment(self) -> float:
        """g(b) − g(a)。"""
        return self.g_right - self.g_left

    @property
    def nonnegative(self) -> bool:
        return self.A >= 0 and self.B >= 0
