"""
求积误差界：所有函数都在规范区间 [−1, 1] 上工作，一般区间由调用方先做拉回。
"""

from __future__ import annotations

import math
from typing import Optional

from gaussrs.core.config import config
from gaussrs.core.exceptions import IntegrationError, ZeroDenominatorError
from gaussrs.models.chebyshev import ChebyshevValues
from gaussrs.models.coefficients import GaussRSCoefficients
from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.services.oracle import rs_sum_oracle
from gaussrs.services.quadrature import gl2_rs, riemann_integral
from gaussrs.services.quadrature_constants import FAR_WEIGHT, NEAR_WEIGHT, UJEVIC_CONSTANT

CANONICAL = Interval.canonical()


def chebyshev(h: RealFunction, tol: Optional[float] = None) -> ChebyshevValues:
    """T(h,h) = ½∫h² − ¼(∫h)²，σ(h) = 2T(h,h)，积分均在 [−1, 1] 上。

    Raises:
        IntegrationError: 积分失败，或 T 的负值超出舍入误差允许范围。
    """
    norm2_sq = riemann_integral(h.squared(), CANONICAL, tol)
    mean_integral = riemann_integral(h, CANONICAL, tol)
    T = norm2_sq / 2 - mean_integral**2 / 4
    if T < -config.sigma_epsilon * (1 + norm2_sq):
        raise IntegrationError(f"Chebyshev 泛函 T({h.name}) = {T:.3e} 为负，超出舍入误差范围")
    return ChebyshevValues(T=T, sigma=2 * T, norm2_sq=norm2_sq, mean_integral=mean_integral)


def bound_bv_hoelder(H: float, r: float, V: float) -> float:
    """f 为 r-H Hölder、g 有界变差时的界 H·((3+√3)/3)^r·V。"""
    if H <= 0 or r <= 0 or V < 0:
        raise ValueError("要求 H > 0、r > 0、V ≥ 0")
    return H * FAR_WEIGHT**r * V


def bound_lip_hoelder(L_g: float, H_f: float, r: float) -> float:
    """f 为 r-H_f Hölder、g 为 L_g-Lipschitz 时的界 L_g·H_f/(r+1)·[((3−√3)/3)^(r+1) + ((3+√3)/3)^(r+1)]。"""
    if L_g <= 0 or H_f <= 0 or r <= 0:
        raise ValueError("要求 L_g、H_f、r 均为正数")
    return L_g * H_f / (r + 1) * (NEAR_WEIGHT ** (r + 1) + FAR_WEIGHT ** (r + 1))


def bound_gruss(
    f: RealFunction,
    g_prime: RealFunction,
    tol: Optional[float] = None,
    *,
    f_values: Optional[ChebyshevValues] = None,
) -> float:
    """σ^½(f)·σ^½(g′)；在舍入范围内为负的 σ 截断为 0。"""
    sigma_f = (f_values or chebyshev(f, tol)).clamped_sigma
    sigma_g = chebyshev(g_prime, tol).clamped_sigma
    return math.sqrt(sigma_f) * math.sqrt(sigma_g)


def bound_ujevic(f_prime: RealFunction, tol: Optional[float] = None) -> float:
    """Riemann 情形 g(t)=t 的界 √((4 − 2√3)/3)·σ^½(f′)。"""
    return UJEVIC_CONSTANT * math.sqrt(chebyshev(f_prime, tol).clamped_sigma)


def monotone_kernel(f: RealFunction, coeffs: GaussRSCoefficients) -> RealFunction:
    """p(t) = f(t) − [A·f(x₋) + B·f(x₊)] / (g(b) − g(a))，误差可写成 ∫ p dg。"""
    if coeffs.increment == 0:
        raise ZeroDenominatorError("g(b) = g(a)，核函数 p 的分母为零")
    level = gl2_rs(f, RealFunction.identity(), coeffs.interval, coeffs=coeffs) / coeffs.increment
    return f.shifted(-level)


def bound_monotone(
    f: RealFunction, g: RealFunction, coeffs: GaussRSCoefficients, tol: Optional[float] = None
) -> float:
    """单调不减积分子的界 ∫ |p(t)| dg(t)，由 RS 和式参照值计算。"""
    kernel = monotone_kernel(f, coeffs)
    return rs_sum_oracle(kernel.absolute(), g, coeffs.interval, tol)


def gruss_coupling(f_values: ChebyshevValues, coeffs: GaussRSCoefficients, rule: float) -> float:
    """[g(1) − g(−1)]·f̄ − rule，f̄ 为 f 在 [−1, 1] 上的均值。

    误差恰好等于 ∫(f − f̄)(g′ − ḡ′) 加上这一项；σ^½(f)·σ^½(g′) 只控制前者。
    """
    return coeffs.increment * f_values.mean_integral / 2 - rule
