"""
内层 Riemann 积分、系数构造与两点求积公式的测试。
"""

import math

import numpy as np
import pytest
from scipy import integrate

from gaussrs.core.exceptions import ExprDomainError, IntegrationError
from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.repositories.corpus import CorpusRepository
from gaussrs.services.quadrature import (
    classical_gl2,
    coefficients,
    gl2_rs,
    gl2_rs_composite,
    mercer_trapezoid,
    riemann_integral,
)

SQRT3 = math.sqrt(3)

# 50 个参数化积分子：幂函数、指数、带线性项的正弦、振荡项、余弦、三次多项式与对数
INTEGRATOR_FAMILY = (
    [f"t^{k}" for k in range(1, 11)]
    + [f"exp({c}*t)" for c in (0.25, 0.5, 1, 1.5, 2, -1, -2, 3)]
    + [f"sin({c}*t) + {d}*t" for c in (1, 2, 3, 5, 7) for d in (0, 1)]
    + [f"t + sin({c}*pi*t)^2" for c in range(1, 9)]
    + [f"cos({c}*t)" for c in range(1, 7)]
    + [f"t^3 + {c}*t^2" for c in (-2, -1, 1, 2)]
    + [f"log(t + {c})" for c in (2, 3, 4, 5)]
)


class TestRiemannIntegral:
    """测试自适应 Simpson。"""

    def test_closed_forms(self, fn, canonical) -> None:
        """测试有解析值的被积函数。"""
        assert riemann_integral(fn("t"), canonical) == pytest.approx(0, abs=1e-12)
        assert riemann_integral(fn("t^2"), Interval(0, 1)) == pytest.approx(1 / 3, abs=1e-12)
        assert riemann_integral(fn("exp(t)"), canonical) == pytest.approx(math.e - 1 / math.e, abs=1e-10)

    @pytest.mark.parametrize(
        "text, a, b",
        [
            ("sin(t)*exp(t)", -1, 1),
            ("1/(t+3)", -1, 2),
            ("cos(3*t)^2", 0, 2),
            ("abs(t - 0.3)", -1, 1),
            ("sqrt(t+2)", -1, 1),
        ],
    )
    def test_agrees_with_scipy_quad(self, fn, text: str, a: float, b: float) -> None:
        """测试与 scipy.integrate.quad 结果一致。"""
        h = fn(text)
        expected, _ = integrate.quad(h, a, b, epsabs=1e-13, epsrel=1e-13, limit=200)
        assert riemann_integral(h, Interval(a, b), 1e-11) == pytest.approx(expected, abs=1e-9)

    def test_domain_error_propagates(self, fn, canonical) -> None:
        """测试定义域错误原样抛出。"""
        with pytest.raises(ExprDomainError):
            riemann_integral(fn("1/t"), canonical)

    @pytest.mark.parametrize(
        "text, expected", [("sin(8*pi*t)^2", 1.0), ("sin(16*pi*t)^2", 1.0), ("cos(8*pi*t)^2", 1.0)]
    )
    def test_oscillation_hidden_by_initial_grid(self, fn, canonical, text: str, expected: float) -> None:
        """测试初始网格全部落在零点上的振荡被积函数。"""
        assert riemann_integral(fn(text), canonical) == pytest.approx(expected, abs=1e-9)

    def test_depth_budget(self, canonical) -> None:
        """测试超过细分层数时报错。"""
        step = RealFunction(lambda xs: np.where(xs > 0.3, 1.0, 0.0), name="step")
        with pytest.raises(IntegrationError):
            riemann_integral(step, canonical, max_depth=3)

    def test_non_finite_integrand(self, canonical) -> None:
        """测试被积函数取到无穷时报错。"""
        spike = RealFunction(lambda xs: np.where(xs == 0, np.inf, 1.0), name="spike")
        with pytest.raises(IntegrationError):
            riemann_integral(spike, canonical)

    def test_invalid_tolerance(self, fn, canonical) -> None:
        """测试非正容限被拒绝。"""
        with pytest.raises(ValueError):
            riemann_integral(fn("t"), canonical, 0)


class TestCoefficients:
    """测试权系数 A、B。"""

    def test_identity_integrator_gives_classical_weights(self, fn, canonical) -> None:
        """测试 g(t) = t 时退化为经典权 1、1。"""
        coeffs = coefficients(fn("t"), canonical)
        assert coeffs.A == pytest.approx(1, abs=1e-12)
        assert coeffs.B == pytest.approx(1, abs=1e-12)

    def test_odd_integrator(self, fn, canonical) -> None:
        """测试奇积分子 t³ 的系数。"""
        coeffs = coefficients(fn("t^3"), canonical)
        assert coeffs.A == pytest.approx(1, abs=1e-9)
        assert coeffs.B == pytest.approx(1, abs=1e-9)

    def test_even_integrator(self, fn, canonical) -> None:
        """测试偶积分子 t² 的系数符号相反。"""
        coeffs = coefficients(fn("t^2"), canonical)
        assert coeffs.A == pytest.approx(-2 * SQRT3 / 3, abs=1e-9)
        assert coeffs.B == pytest.approx(2 * SQRT3 / 3, abs=1e-9)
        assert not coeffs.nonnegative

    @pytest.mark.parametrize("text", ["t", "t^3", "t^2", "sin(t)", "exp(t)", "abs(t)"])
    def test_sum_matches_increment(self, fn, canonical, text: str) -> None:
        """测试 A + B 等于 g 的增量。"""
        g = fn(text)
        coeffs = coefficients(g, canonical)
        assert abs(coeffs.A + coeffs.B - (g(1) - g(-1))) <= 1e-9
        assert coeffs.increment == g(1) - g(-1)

    @pytest.mark.parametrize("text", INTEGRATOR_FAMILY)
    def test_sum_matches_increment_over_family(self, fn, canonical, text: str) -> None:
        """测试参数化积分子族上 A + B 与增量一致。"""
        g = fn(text)
        coeffs = coefficients(g, canonical, 1e-10)
        assert abs(coeffs.A + coeffs.B - (g(1) - g(-1))) <= 10 * 1e-10

    @pytest.mark.parametrize("text", ["sin(t)", "t+t^3", "t^5 - 2*t"])
    def test_odd_reduction(self, fn, canonical, text: str) -> None:
        """测试奇积分子下 A = B = g(1)。"""
        g = fn(text)
        coeffs = coefficients(g, canonical)
        assert coeffs.A == pytest.approx(g(1), abs=1e-9)
        assert coeffs.B == pytest.approx(g(1), abs=1e-9)

    @pytest.mark.parametrize("g_text", ["t^2", "cos(t)", "exp(-t^2)"])
    @pytest.mark.parametrize("f_text", ["t", "exp(t)", "t^3 + t^2"])
    def test_even_reduction(self, fn, canonical, f_text: str, g_text: str) -> None:
        """测试偶积分子下的化简公式。"""
        f, g = fn(f_text), fn(g_text)
        coeffs = coefficients(g, canonical)
        assert coeffs.A == pytest.approx(-coeffs.B, abs=1e-9)
        half_integral, _ = integrate.quad(g, 0, 1, epsabs=1e-13)
        node = 1 / SQRT3
        expected = SQRT3 * (g(1) - half_integral) * (f(node) - f(-node))
        assert gl2_rs(f, g, canonical) == pytest.approx(expected, abs=1e-9)

    def test_general_interval_uses_pulled_back_integrator(self, fn) -> None:
        """测试一般区间使用拉回后的积分子。"""
        iv = Interval(0, 2)
        coeffs = coefficients(fn("t"), iv)
        # g∘φ(u) = 1 + u
        assert coeffs.A == pytest.approx(1, abs=1e-12)
        assert coeffs.B == pytest.approx(1, abs=1e-12)
        assert coeffs.g_mean_integral == pytest.approx(2, abs=1e-12)


class TestRule:
    """测试两点求积公式及其复合形式。"""

    @pytest.mark.parametrize("g_text", ["t", "t^2", "sin(t)", "exp(t)"])
    def test_constant_integrand_gives_increment(self, fn, canonical, g_text: str) -> None:
        """测试 f ≡ 1 时得到 g 的增量。"""
        g = fn(g_text)
        assert gl2_rs(fn("1"), g, canonical) == pytest.approx(g(1) - g(-1), abs=1e-12)

    def test_examples(self, fn, canonical) -> None:
        """测试两组手算示例。"""
        assert gl2_rs(fn("t"), fn("t^2"), canonical) == pytest.approx(4 / 3, abs=1e-9)
        assert gl2_rs(fn("t^2"), fn("t^3"), canonical) == pytest.approx(2 / 3, abs=1e-9)

    def test_exactness_degree_one_over_corpus(self, fn, canonical, corpus_repo: CorpusRepository) -> None:
        """测试语料积分子上对一次多项式精确。"""
        integrators = corpus_repo.list_integrators()
        assert integrators
        for item in integrators:
            g = fn(item.expr)
            integral, _ = integrate.quad(g, -1, 1, epsabs=1e-13)
            assert gl2_rs(fn("1"), g, canonical) == pytest.approx(g(1) - g(-1), abs=1e-9)
            assert gl2_rs(fn("t"), g, canonical) == pytest.approx(g(1) + g(-1) - integral, abs=1e-9)

    def test_integrator_family_size(self) -> None:
        """测试积分子族恰有 50 个互不相同的成员。"""
        assert len(INTEGRATOR_FAMILY) == 50
        assert len(set(INTEGRATOR_FAMILY)) == 50

    @pytest.mark.parametrize("text", INTEGRATOR_FAMILY)
    def test_exactness_degree_one_over_family(self, fn, canonical, text: str) -> None:
        """测试参数化积分子族上对一次多项式精确。"""
        g = fn(text)
        integral, _ = integrate.quad(g, -1, 1, epsabs=1e-13, epsrel=1e-13, limit=200)
        assert gl2_rs(fn("1"), g, canonical) == pytest.approx(g(1) - g(-1), abs=1e-9)
        assert gl2_rs(fn("t"), g, canonical) == pytest.approx(g(1) + g(-1) - integral, abs=1e-9)

    def test_oscillating_integrator_is_exact_for_linear_integrand(self, fn, canonical) -> None:
        """测试振荡积分子下 f(t) = t 仍然精确。"""
        # ∫ sin²(8πt) dt = 1，g(1) + g(−1) = 0
        assert gl2_rs(fn("t"), fn("t + sin(8*pi*t)^2"), canonical) == pytest.approx(-1, abs=1e-9)

    def test_affine_invariance(self, fn) -> None:
        """测试仿射拉回不改变结果。"""
        f, g, iv = fn("exp(t)"), fn("sin(t) + t^2"), Interval(0.5, 2.5)
        pulled = gl2_rs(f.pullback(iv), g.pullback(iv), Interval.canonical())
        assert gl2_rs(f, g, iv) == pytest.approx(pulled, abs=1e-9)

    def test_composite_single_panel_is_identical(self, fn) -> None:
        """测试 n = 1 的复合公式与单段公式相同。"""
        f, g, iv = fn("cos(t)"), fn("exp(t)"), Interval(-0.3, 1.7)
        assert gl2_rs_composite(f, g, iv, 1) == gl2_rs(f, g, iv)

    def test_composite_refinement_improves(self, fn, canonical) -> None:
        """测试加密剖分后误差变小。"""
        f, g = fn("t^2"), fn("t^3")
        one = gl2_rs_composite(f, g, canonical, 1)
        two = gl2_rs_composite(f, g, canonical, 2)
        assert one == pytest.approx(2 / 3, abs=1e-9)
        assert abs(two - 6 / 5) < abs(one - 6 / 5)

    @pytest.mark.parametrize("n", [1, 3, 16])
    def test_composite_telescopes_for_constant_integrand(self, fn, n: int) -> None:
        """测试常数被积函数下各段增量相消。"""
        g, iv = fn("exp(t) + t^2"), Interval(-1, 3)
        assert gl2_rs_composite(fn("1"), g, iv, n) == pytest.approx(g(3) - g(-1), abs=1e-9)

    def test_composite_is_deterministic_across_workers(self, fn, canonical) -> None:
        """测试结果与线程数无关。"""
        f, g = fn("sin(3*t)"), fn("exp(t)")
        serial = gl2_rs_composite(f, g, canonical, 12, workers=1)
        parallel = gl2_rs_composite(f, g, canonical, 12, workers=4)
        assert serial == parallel

    def test_composite_rejects_zero_panels(self, fn, canonical) -> None:
        """测试段数为 0 时报错。"""
        with pytest.raises(ValueError):
            gl2_rs_composite(fn("t"), fn("t"), canonical, 0)


class TestBaselines:
    """测试 Mercer 梯形规则与经典两点公式。"""

    def test_mercer(self, fn, canonical) -> None:
        """测试 Mercer 梯形规则。"""
        f = fn("exp(t)")
        assert mercer_trapezoid(f, fn("t"), canonical) == pytest.approx(f(-1) + f(1), abs=1e-12)
        assert mercer_trapezoid(fn("1"), fn("sin(t)"), canonical) == pytest.approx(2 * math.sin(1), abs=1e-12)
        assert mercer_trapezoid(fn("t^2"), fn("t^3"), canonical) == pytest.approx(2, abs=1e-12)

    def test_classical(self, fn, canonical) -> None:
        """测试经典两点公式的代数精度。"""
        assert classical_gl2(fn("t^3"), canonical) == pytest.approx(0, abs=1e-15)
        assert classical_gl2(fn("t^2"), canonical) == pytest.approx(2 / 3, abs=1e-15)
        assert classical_gl2(fn("t^4"), canonical) == pytest.approx(2 / 9, abs=1e-15)

    def test_classical_on_general_interval(self, fn) -> None:
        """测试经典两点公式在一般区间上。"""
        assert classical_gl2(fn("t^2"), Interval(0, 1)) == pytest.approx(1 / 3, abs=1e-15)
