from __future__ import annotations

import math
from typing import Literal

SQRT3 = math.sqrt(3)
NODE = SQRT3 / 3
"""Gauss–Legendre 两点节点 ±√3/3，按工作精度计算"""
COEFFICIENT_SCALE = 3 / (2 * SQRT3)
"""A、B 表达式的公共因子 3/(2√3)"""
NEAR_WEIGHT = (3 - SQRT3) / 3
FAR_WEIGHT = (3 + SQRT3) / 3
UJEVIC_CONSTANT = math.sqrt((4 - 2 * SQRT3) / 3)
"""Riemann 情形两点公式的最佳常数 √((4 − 2√3)/3)"""

BoundId = Literal["thm2.2", "thm2.3", "eq2.14", "eq1.1", "remark-a"]
BOUND_ORDER: tuple[BoundId, ...] = ("thm2.2", "thm2.3", "eq2.14", "eq1.1", "remark-a")

COMPARATORS = ("mercer", "classical")
