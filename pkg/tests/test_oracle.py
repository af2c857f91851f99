"""
参照值与常数估计的测试。
"""

import math

import pytest

from gaussrs.core.exceptions import MissingDerivativeError, OracleNonConvergenceError
from gaussrs.models.interval import Interval
from gaussrs.schemas.corpus import CorpusPair
from gaussrs.services.oracle import (
    holder_constant_estimate,
    ibp_oracle,
    low_discrepancy_points,
    rs_partial_sum,
    rs_sum_oracle,
    total_variation,
)


class TestRiemannStieltjesSums:
    """测试 RS 和式参照值。"""

    def test_telescoping_constant_integrand(self, fn, canonical) -> None:
        """测试常数被积函数的和式相消。"""
        assert rs_partial_sum(fn("1"), fn("t^3"), canonical, 64) == pytest.approx(2, abs=1e-14)
        assert rs_sum_oracle(fn("1"), fn("t^3"), canonical) == pytest.approx(2, abs=1e-14)

    def test_examples(self, fn, canonical) -> None:
        """测试和式参照值的示例。"""
        assert rs_sum_oracle(fn("t^2"), fn("t^3"), canonical) == pytest.approx(6 / 5, abs=1e-9)
        assert rs_sum_oracle(fn("t"), fn("t^2"), canonical) == pytest.approx(4 / 3, abs=1e-9)

    def test_non_convergence_reports_last_estimate(self, fn, canonical) -> None:
        """测试不收敛时报告最后一次估计。"""
        with pytest.raises(OracleNonConvergenceError) as info:
            rs_sum_oracle(fn("t^2"), fn("t"), canonical, 1e-30, max_n=256)
        assert info.value.n == 256
        assert info.value.exit_code == 3
        assert info.value.estimate == pytest.approx(2 / 3, abs=1e-3)
        assert info.value.delta > 1e-30

    def test_budget_below_second_estimate(self, fn, canonical) -> None:
        """测试剖分上限不足以做第二次估计。"""
        with pytest.raises(OracleNonConvergenceError) as info:
            rs_sum_oracle(fn("t"), fn("t"), canonical, initial_n=64, max_n=64)
        assert info.value.n == 64
        assert math.isinf(info.value.delta)


class TestIntegrationByParts:
    """测试分部积分参照值。"""

    def test_constant_integrand(self, fn) -> None:
        """测试常数被积函数。"""
        g, iv = fn("exp(t)"), Interval(-1, 2)
        assert ibp_oracle(fn("1"), g, iv) == pytest.approx(g(2) - g(-1), abs=1e-12)

    def test_example(self, fn, canonical) -> None:
        """测试分部积分参照值的示例。"""
        assert ibp_oracle(fn("t^2"), fn("t^3"), canonical) == pytest.approx(6 / 5, abs=1e-9)

    def test_non_smooth_integrator(self, fn, canonical) -> None:
        """测试不光滑的积分子。"""
        f, g = fn("t"), fn("abs(t)")
        by_parts = ibp_oracle(f, g, canonical)
        assert by_parts == pytest.approx(1, abs=1e-9)
        assert rs_sum_oracle(f, g, canonical) == pytest.approx(by_parts, abs=1e-9)

    def test_requires_derivative(self, fn, canonical) -> None:
        """测试缺少 f′ 时报错。"""
        with pytest.raises(MissingDerivativeError):
            ibp_oracle(fn("abs(t)"), fn("t"), canonical)

    def test_agrees_with_sums_over_corpus(self, fn, corpus_pairs: list[CorpusPair]) -> None:
        """测试语料上两种参照值一致。"""
        smooth = [pair for pair in corpus_pairs if pair.smooth]
        assert len(smooth) >= 30
        for pair in smooth:
            f, g = pair.functions()
            iv = pair.interval()
            assert abs(rs_sum_oracle(f, g, iv) - ibp_oracle(f, g, iv)) <= 1e-7, pair.label


class TestTotalVariation:
    """测试全变差估计。"""

    @pytest.mark.parametrize("text", ["t", "t^3", "t^2"])
    def test_examples(self, fn, canonical, text: str) -> None:
        """测试全变差估计的示例。"""
        assert total_variation(fn(text), canonical) == pytest.approx(2, abs=1e-12)

    def test_monotone_in_levels(self, fn, canonical) -> None:
        """测试估计随细化层数单调不减。"""
        g = fn("cos(5*t) + t")
        values = [total_variation(g, canonical, levels) for levels in range(1, 7)]
        assert values == sorted(values)

    def test_rejects_zero_levels(self, fn, canonical) -> None:
        """测试层数为 0 时报错。"""
        with pytest.raises(ValueError):
            total_variation(fn("t"), canonical, 0)


class TestHolderEstimate:
    """测试 Hölder 常数估计。"""

    def test_linear(self, fn, canonical) -> None:
        """测试线性函数的 Hölder 常数。"""
        assert holder_constant_estimate(fn("t"), 1, canonical) == pytest.approx(1, abs=1e-12)

    def test_square_approaches_two_from_below(self, fn, canonical) -> None:
        """测试 t² 的估计从下方逼近 2。"""
        estimate = holder_constant_estimate(fn("t^2"), 1, canonical)
        assert 1.9 < estimate <= 2 + 1e-12

    def test_square_root(self, fn, canonical) -> None:
        """测试平方根的 Hölder 常数。"""
        assert holder_constant_estimate(fn("sqrt(t+1)"), 0.5, canonical) == pytest.approx(1, abs=1e-12)

    def test_nested_samples_are_monotone(self, fn, canonical) -> None:
        """测试样本嵌套时估计单调。"""
        f = fn("sin(4*t)")
        values = [holder_constant_estimate(f, 1, canonical, samples) for samples in (8, 32, 128, 512)]
        assert values == sorted(values)

    def test_points_are_nested(self, canonical) -> None:
        """测试采样点嵌套。"""
        small = low_discrepancy_points(canonical, 16)
        large = low_discrepancy_points(canonical, 64)
        assert small.tolist() == large[:16].tolist()
        assert small[0] == 1.0 and small[1] == -1.0

    @pytest.mark.parametrize("r, samples", [(0, 16), (1, 1)])
    def test_rejects_bad_arguments(self, fn, canonical, r: float, samples: int) -> None:
        """测试非法参数被拒绝。"""
        with pytest.raises(ValueError):
            holder_constant_estimate(fn("t"), r, canonical, samples)
