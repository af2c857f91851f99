"""
独立参照值与正则性常数的数值估计。

参照值用于检验求积公式与误差界；常数估计只给出下界，不能替代用户声明的常数。
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.stats import qmc

from gaussrs.core.config import config
from gaussrs.core.exceptions import OracleNonConvergenceError
from gaussrs.core.logger import logger
from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.services.quadrature import riemann_integral

_PAIR_BLOCK = 256


def rs_partial_sum(f: RealFunction, g: RealFunction, iv: Interval, n: int) -> float:
    """n 段等距剖分、中点取值的 Riemann–Stieltjes 和 Σ f(ξᵢ)[g(tᵢ₊₁) − g(tᵢ)]。"""
    grid = iv.grid(n)
    tags = (grid[:-1] + grid[1:]) / 2
    increments = np.diff(g.evaluate(grid))
    return float(np.sum(f.evaluate(tags) * increments))


def rs_sum_oracle(
    f: RealFunction,
    g: RealFunction,
    iv: Interval,
    tol: Optional[float] = None,
    *,
    initial_n: Optional[int] = None,
    max_n: Optional[int] = None,
) -> float:
    """剖分数从 initial_n 起倍增，直到相邻两次估计之差 ≤ tol，返回最后一次估计。

    Raises:
        OracleNonConvergenceError: 剖分数超过 max_n 时仍未满足停止条件。
    """
    tol = config.default_tol if tol is None else tol
    n = config.oracle_initial_n if initial_n is None else initial_n
    max_n = config.oracle_max_n if max_n is None else max_n

    previous = rs_partial_sum(f, g, iv, n)
    delta = float("inf")
    while n * 2 <= max_n:
        n *= 2
        current = rs_partial_sum(f, g, iv, n)
        delta = abs(current - previous)
        if delta <= tol:
            logger.debug("RS 和式收敛 f=%s g=%s n=%s delta=%.3e", f.name, g.name, n, delta)
            return current
        previous = current
    raise OracleNonConvergenceError(previous, delta, n)


def ibp_oracle(f: RealFunction, g: RealFunction, iv: Interval, tol: Optional[float] = None) -> float:
    """分部积分参照值 f(b)g(b) − f(a)g(a) − ∫ₐᵇ g·f′ dt。"""
    f_prime = f.require_derivative()
    boundary = f(iv.b) * g(iv.b) - f(iv.a) * g(iv.a)
    return boundary - riemann_integral(g.times(f_prime), iv, tol)


def total_variation(g: RealFunction, iv: Interval, levels: Optional[int] = None) -> float:
    """全变差的下界估计：第 k 层取 2ᵏ·64 段等距剖分，返回各层增量绝对值和的最大值。

    剖分逐层嵌套，结果随 levels 单调不减；这是估计而非证书。
    """
    levels = config.variation_levels if levels is None else levels
    if levels < 1:
        raise ValueError("levels 必须 ≥ 1")
    best = 0.0
    for k in range(1, levels + 1):
        grid = iv.grid(2**k * 64)
        best = max(best, float(np.sum(np.abs(np.diff(g.evaluate(grid))))))
    logger.debug("全变差估计 g=%s levels=%s value=%.12g", g.name, levels, best)
    return best


def low_discrepancy_points(iv: Interval, samples: int) -> np.ndarray:
    """右端点 b 加上 van der Corput 序列映到 [a, b] 的前 samples − 1 个点（首点即 a）。

    对 samples 嵌套：较小的点集总是较大点集的前缀。
    """
    sequence = qmc.Halton(d=1, scramble=False).random(samples - 1)[:, 0]
    return np.concatenate([[iv.b], iv.a + iv.width * sequence])


def holder_constant_estimate(
    f: RealFunction, r: float, iv: Interval, samples: Optional[int] = None
) -> float:
    """max |f(x) − f(y)| / |x − y|^r，取遍低差异点集中的所有点对；是最佳 H_f 的下界估计。"""
    samples = config.holder_samples if samples is None else samples
    if r <= 0:
        raise ValueError("Hölder 指数 r 必须为正数")
    if samples < 2:
        raise ValueError("samples 必须 ≥ 2")
    points = low_discrepancy_points(iv, samples)
    values = f.evaluate(points)
    best = 0.0
    for start in range(0, samples, _PAIR_BLOCK):
        block = slice(start, start + _PAIR_BLOCK)
        gaps = np.abs(points[block, None] - points[None, :])
        jumps = np.abs(values[block, None] - values[None, :])
        distinct = gaps > 0
        if distinct.any():
            best = max(best, float(np.max(jumps[distinct] / gaps[distinct] ** r)))
    return best
