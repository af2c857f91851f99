"""
两点 Gauss–Legendre 型 Riemann–Stieltjes 求积：系数构造、单段与复合求积，以及对照用的基线公式。

一般区间 [a, b] 通过 φ(u) = (a+b)/2 + u(b−a)/2 拉回到 [−1, 1]：
∫ₐᵇ f dg = ∫₋₁¹ (f∘φ) d(g∘φ)，没有 Jacobian 因子。
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from gaussrs.core.config import config
from gaussrs.core.exceptions import IntegrationError
from gaussrs.core.logger import logger
from gaussrs.models.coefficients import GaussRSCoefficients
from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.services.quadrature_constants import COEFFICIENT_SCALE, FAR_WEIGHT, NEAR_WEIGHT, NODE


def riemann_integral(
    h: RealFunction,
    iv: Interval,
    tol: Optional[float] = None,
    *,
    max_depth: Optional[int] = None,
    min_depth: Optional[int] = None,
    initial_panels: Optional[int] = None,
    max_evaluations: Optional[int] = None,
) -> float:
    """自适应 Simpson 求 ∫ₐᵇ h(t) dt，估计绝对误差不超过 tol。

    逐层推进：每一层对所有未收敛的子区间同时做二分（向量化求值），
    子区间容限按宽度占比分配；前 min_depth 层不接受任何子区间。
    结果按左端点顺序用 fsum 归约，保证确定性。

    Raises:
        IntegrationError: 超过细分层数或求值预算仍未收敛，或被积函数取到非有限值。
    """
    tol = config.default_tol if tol is None else tol
    max_depth = config.simpson_max_depth if max_depth is None else max_depth
    min_depth = min(config.simpson_min_depth if min_depth is None else min_depth, max_depth)
    panels = config.simpson_initial_panels if initial_panels is None else initial_panels
    budget = config.simpson_max_evaluations if max_evaluations is None else max_evaluations
    if tol <= 0:
        raise ValueError("tol 必须为正数")

    def sample(xs: np.ndarray) -> np.ndarray:
        values = h.evaluate(xs)
        if not np.all(np.isfinite(values)):
            raise IntegrationError(f"被积函数 {h.name} 在积分区间内取到非有限值")
        return values

    edges = iv.grid(panels)
    left, right = edges[:-1], edges[1:]
    mid = (left + right) / 2
    f_left, f_mid, f_right = sample(left), sample(mid), sample(right)
    whole = (right - left) / 6 * (f_left + 4 * f_mid + f_right)
    local_tol = np.full_like(left, tol / panels)
    evaluations = 3 * panels

    accepted_at: list[np.ndarray] = []
    accepted_value: list[np.ndarray] = []
    for depth in range(max_depth + 1):
        quarter_left = (left + mid) / 2
        quarter_right = (mid + right) / 2
        f_ql, f_qr = sample(quarter_left), sample(quarter_right)
        evaluations += 2 * left.size
        left_half = (mid - left) / 6 * (f_left + 4 * f_ql + f_mid)
        right_half = (right - mid) / 6 * (f_mid + 4 * f_qr + f_right)
        delta = left_half + right_half - whole
        done = np.abs(delta) <= 15 * local_tol
        if depth < min_depth:
            done[:] = False

        accepted_at.append(left[done])
        accepted_value.append((left_half + right_half + delta / 15)[done])
        if done.all():
            logger.debug("自适应 Simpson 收敛 integrand=%s depth=%s evaluations=%s", h.name, depth, evaluations)
            break
        if depth == max_depth or evaluations > budget:
            raise IntegrationError(
                f"自适应 Simpson 在 {depth} 层、{evaluations} 次求值后仍有 {int((~done).sum())} 个子区间未收敛"
            )

        todo = ~done
        left, mid, right = left[todo], mid[todo], right[todo]
        f_left, f_mid, f_right = f_left[todo], f_mid[todo], f_right[todo]
        quarter_left, quarter_right = quarter_left[todo], quarter_right[todo]
        f_ql, f_qr = f_ql[todo], f_qr[todo]
        left_half, right_half = left_half[todo], right_half[todo]
        half_tol = local_tol[todo] / 2

        left, mid, right = (
            np.concatenate([left, mid]),
            np.concatenate([quarter_left, quarter_right]),
            np.concatenate([mid, right]),
        )
        f_left, f_mid, f_right = (
            np.concatenate([f_left, f_mid]),
            np.concatenate([f_ql, f_qr]),
            np.concatenate([f_mid, f_right]),
        )
        whole = np.concatenate([left_half, right_half])
        local_tol = np.concatenate([half_tol, half_tol])

    starts = np.concatenate(accepted_at)
    values = np.concatenate(accepted_value)
    order = np.argsort(starts, kind="stable")
    return math.fsum(values[order].tolist())


def nodes(iv: Interval) -> tuple[float, float]:
    """映射到 iv 上的两个求积节点 φ(−√3/3)、φ(√3/3)。"""
    return iv.from_canonical(-NODE), iv.from_canonical(NODE)


def coefficients(g: RealFunction, iv: Interval, tol: Optional[float] = None) -> GaussRSCoefficients:
    """按 A、B 的显式公式构造权系数。

    对一般区间返回拉回积分子 g∘φ 的系数，其中 ∫₋₁¹ g∘φ = (2/(b−a))·∫ₐᵇ g。
    """
    tol = config.default_tol if tol is None else tol
    g_left, g_right = g(iv.a), g(iv.b)
    inner = riemann_integral(g, iv, tol) / iv.half_width
    A = COEFFICIENT_SCALE * (inner - NEAR_WEIGHT * g_right - FAR_WEIGHT * g_left)
    B = COEFFICIENT_SCALE * (FAR_WEIGHT * g_right + NEAR_WEIGHT * g_left - inner)
    return GaussRSCoefficients(
        A=A, B=B, g_left=g_left, g_right=g_right, g_mean_integral=inner, interval=iv, tol=tol
    )


def gl2_rs(
    f: RealFunction,
    g: RealFunction,
    iv: Interval,
    tol: Optional[float] = None,
    *,
    coeffs: Optional[GaussRSCoefficients] = None,
) -> float:
    """A·f(φ(−√3/3)) + B·f(φ(√3/3))，近似 ∫ₐᵇ f dg。"""
    if coeffs is None:
        coeffs = coefficients(g, iv, tol)
    x_minus, x_plus = nodes(iv)
    return coeffs.A * f(x_minus) + coeffs.B * f(x_plus)


def gl2_rs_composite(
    f: RealFunction,
    g: RealFunction,
    iv: Interval,
    n: int,
    tol: Optional[float] = None,
    *,
    workers: Optional[int] = None,
) -> float:
    """在 n 个等宽子区间上分别应用两点公式后求和，求和按子区间顺序进行。"""
    if n < 1:
        raise ValueError("复合求积的段数 n 必须 ≥ 1")
    workers = config.workers if workers is None else workers
    panels = iv.split(n)
    if workers > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda panel: gl2_rs(f, g, panel, tol), panels))
    else:
        values = [gl2_rs(f, g, panel, tol) for panel in panels]
    return math.fsum(values)


def mercer_trapezoid(f: RealFunction, g: RealFunction, iv: Interval, tol: Optional[float] = None) -> float:
    """Mercer 梯形规则 [G − g(a)]f(a) + [g(b) − G]f(b)，G 为 g 在 [a, b] 上的平均值。"""
    G = riemann_integral(g, iv, tol) / iv.width
    return (G - g(iv.a)) * f(iv.a) + (g(iv.b) - G) * f(iv.b)


def classical_gl2(f: RealFunction, iv: Interval) -> float:
    """经典两点 Gauss–Legendre 公式 (b−a)/2·[f(φ(−√3/3)) + f(φ(√3/3))]。"""
    x_minus, x_plus = nodes(iv)
    return iv.half_width * (f(x_minus) + f(x_plus))
