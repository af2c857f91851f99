"""
误差界报告：计算求积值与参照值，并按固定顺序给出每个误差界的数值、严格性与适用性说明。

误差界都在 [−1, 1] 上陈述，一般区间先用 φ 拉回 f、g，并按以下方式换算声明的常数：
Hölder H ↦ H·((b−a)/2)^r，Lipschitz L ↦ L·(b−a)/2，全变差不变。
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np

from gaussrs.core.config import config
from gaussrs.core.exceptions import GaussRSError, MissingDerivativeError
from gaussrs.core.logger import logger
from gaussrs.models.chebyshev import ChebyshevValues
from gaussrs.models.coefficients import GaussRSCoefficients
from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.schemas.report import BoundEntry, ErrorBoundReport
from gaussrs.schemas.run import ReportOptions
from gaussrs.schemas.smoothness import (
    BoundedVariationSpec,
    HoelderSpec,
    L2DerivativeSpec,
    LipschitzSpec,
    MonotoneSpec,
    SmoothnessSpec,
)
from gaussrs.services.bounds import (
    bound_bv_hoelder,
    bound_gruss,
    bound_lip_hoelder,
    bound_monotone,
    bound_ujevic,
    chebyshev,
    gruss_coupling,
)
from gaussrs.services.oracle import holder_constant_estimate, ibp_oracle, rs_sum_oracle, total_variation
from gaussrs.services.quadrature import coefficients, gl2_rs
from gaussrs.services.quadrature_constants import BoundId

CANONICAL = Interval.canonical()
MONOTONE_PROBE_POINTS = 4096

NOTE_ESTIMATED = "常数为数值估计（下界），结果不构成严格误差界"
NOTE_SIGNED = "A 或 B 为负，推导中去掉绝对值的步骤不成立"


def holder_constants(specs: Sequence[SmoothnessSpec], half_width: float) -> list[tuple[float, float]]:
    """声明的 (r, H) 列表，已换算到 [−1, 1]；Lipschitz L 视为 r = 1、H = L。"""
    pairs: list[tuple[float, float]] = []
    for spec in specs:
        if isinstance(spec, HoelderSpec):
            pairs.append((spec.r, spec.H * half_width**spec.r))
        elif isinstance(spec, LipschitzSpec):
            pairs.append((1.0, spec.L * half_width))
    return pairs


def lipschitz_constant(specs: Sequence[SmoothnessSpec], half_width: float) -> Optional[float]:
    """声明中最小的 Lipschitz 常数（换算到 [−1, 1]）。"""
    values = [H for r, H in holder_constants(specs, half_width) if r == 1.0]
    return min(values) if values else None


def variation_bound(specs: Sequence[SmoothnessSpec], width: float, increment: float) -> Optional[float]:
    """由声明推出的全变差上界：显式声明、Lipschitz 常数 × 区间长度、单调时的增量，取最小者。"""
    values: list[float] = []
    for spec in specs:
        if isinstance(spec, BoundedVariationSpec):
            values.append(spec.V)
        elif isinstance(spec, MonotoneSpec) and increment >= 0:
            values.append(increment)
    values.extend(H * width for r, H in holder_constants(specs, 1.0) if r == 1.0)
    return min(values) if values else None


def declares(specs: Sequence[SmoothnessSpec], kind: type) -> bool:
    return any(isinstance(spec, kind) for spec in specs)


def looks_nondecreasing(g: RealFunction, iv: Interval, points: int = MONOTONE_PROBE_POINTS) -> bool:
    return bool(np.all(np.diff(g.evaluate(iv.grid(points))) >= 0))


@dataclass
class _Pair:
    """一次报告中拉回到 [−1, 1] 的 f、g 及共享的中间量。"""

    f: RealFunction
    g: RealFunction
    coeffs: GaussRSCoefficients
    rule: float
    tol: float
    original: Interval
    specs_f: Sequence[SmoothnessSpec]
    specs_g: Sequence[SmoothnessSpec]
    options: ReportOptions
    notes: list[str] = field(default_factory=list)
    _f_values: Optional[ChebyshevValues] = None

    def f_values(self) -> ChebyshevValues:
        if self._f_values is None:
            self._f_values = chebyshev(self.f, self.tol)
        return self._f_values


class _Inapplicable(Exception):
    """某个误差界的假设不满足，消息即适用性说明。"""


class BoundReportService:
    """汇总两点公式的求积值、参照值与各误差界"""

    def __init__(self) -> None:
        self._builders: dict[BoundId, Callable[[_Pair], BoundEntry]] = {
            "thm2.2": self._bv_hoelder_entry,
            "thm2.3": self._lip_hoelder_entry,
            "eq2.14": self._gruss_entry,
            "eq1.1": self._ujevic_entry,
            "remark-a": self._monotone_entry,
        }

    def build_report(
        self,
        f: RealFunction,
        g: RealFunction,
        iv: Interval,
        specs_f: Sequence[SmoothnessSpec] = (),
        specs_g: Sequence[SmoothnessSpec] = (),
        options: Optional[ReportOptions] = None,
    ) -> ErrorBoundReport:
        """计算求积值，按需计算参照值，并为 options.requested 中的每个误差界给出一个条目。

        求积值与参照值的失败会向上抛出；单个误差界的失败只记录在对应条目中。
        """
        options = options or ReportOptions()
        tol = config.default_tol if options.tol is None else options.tol

        coeffs = coefficients(g, iv, tol)
        rule = gl2_rs(f, g, iv, coeffs=coeffs)

        oracle_value: Optional[float] = None
        actual_error: Optional[float] = None
        if options.with_oracle:
            if options.oracle_method == "ibp":
                oracle_value = ibp_oracle(f, g, iv, tol)
            else:
                oracle_value = rs_sum_oracle(f, g, iv, tol)
            actual_error = abs(oracle_value - rule)

        base = _Pair(
            f=f.pullback(iv),
            g=g.pullback(iv),
            coeffs=replace(coeffs, interval=CANONICAL),
            rule=rule,
            tol=tol,
            original=iv,
            specs_f=specs_f,
            specs_g=specs_g,
            options=options,
        )
        entries = [self._entry(theorem_id, base) for theorem_id in options.requested]

        report = ErrorBoundReport(
            rule_value=rule, oracle_value=oracle_value, actual_error=actual_error, bounds=entries
        )
        for entry in report.violations():
            logger.warning(
                "严格误差界被实际误差超过 %s: bound=%.15g error=%.15g f=%s g=%s",
                entry.theorem_id,
                entry.bound_value,
                actual_error,
                f.name,
                g.name,
            )
        return report

    def _entry(self, theorem_id: BoundId, base: _Pair) -> BoundEntry:
        pair = replace(base, notes=[])
        try:
            entry = self._builders[theorem_id](pair)
        except _Inapplicable as exc:
            entry = BoundEntry(theorem_id=theorem_id, applicable=False, applicability_note=str(exc))
        except GaussRSError as exc:
            entry = BoundEntry(theorem_id=theorem_id, applicable=False, applicability_note=f"计算失败: {exc}")
        if not entry.applicable:
            logger.info("误差界 %s 不适用: %s", theorem_id, entry.applicability_note)
        elif not entry.rigorous:
            logger.info("误差界 %s 非严格: %s", theorem_id, entry.applicability_note)
        base._f_values = base._f_values or pair._f_values
        return entry

    # 各误差界

    def _holder_f(self, pair: _Pair) -> list[tuple[float, float]]:
        declared = holder_constants(pair.specs_f, pair.original.half_width)
        if declared:
            return declared
        if not pair.options.estimate_constants:
            raise _Inapplicable("缺少 f 的 Hölder 或 Lipschitz 声明")
        pair.notes.append(f"H_f {NOTE_ESTIMATED}")
        return [(1.0, holder_constant_estimate(pair.f, 1.0, CANONICAL))]

    def _bv_hoelder_entry(self, pair: _Pair) -> BoundEntry:
        if pair.coeffs.increment == 0:
            raise _Inapplicable("g(b) = g(a)，证明中需要除以 g(b) − g(a)")
        constants = self._holder_f(pair)
        V = variation_bound(pair.specs_g, pair.original.width, pair.coeffs.increment)
        if V is None:
            if not pair.options.estimate_constants:
                raise _Inapplicable("缺少 g 的有界变差、Lipschitz 或单调声明")
            pair.notes.append(f"全变差{NOTE_ESTIMATED}")
            V = total_variation(pair.g, CANONICAL)
        value = min(bound_bv_hoelder(H, r, V) if H > 0 else 0.0 for r, H in constants)
        return self._finish("thm2.2", pair, value, signed_sensitive=True)

    def _lip_hoelder_entry(self, pair: _Pair) -> BoundEntry:
        constants = self._holder_f(pair)
        L_g = lipschitz_constant(pair.specs_g, pair.original.half_width)
        if L_g is None:
            if not pair.options.estimate_constants:
                raise _Inapplicable("缺少 g 的 Lipschitz 声明")
            pair.notes.append(f"L_g {NOTE_ESTIMATED}")
            L_g = holder_constant_estimate(pair.g, 1.0, CANONICAL)
        value = min(bound_lip_hoelder(L_g, H, r) if H > 0 and L_g > 0 else 0.0 for r, H in constants)
        return self._finish("thm2.3", pair, value, signed_sensitive=True)

    def _gruss_entry(self, pair: _Pair) -> BoundEntry:
        if not pair.g.has_derivative:
            raise _Inapplicable("积分子没有可用的导数（例如包含 abs）")
        declared = declares(pair.specs_f, L2DerivativeSpec) and declares(pair.specs_g, L2DerivativeSpec)
        if not declared:
            if not pair.options.estimate_constants:
                raise _Inapplicable("缺少 f 与 g 的 L2Derivative 声明")
            pair.notes.append("f′、g′ ∈ L₂ 未声明")
        f_values = pair.f_values()
        value = bound_gruss(pair.f, pair.g.require_derivative(), pair.tol, f_values=f_values)
        coupling = gruss_coupling(f_values, pair.coeffs, pair.rule)
        allowed = 10 * pair.tol * (1 + abs(pair.rule) + abs(pair.coeffs.increment))
        if abs(coupling) > allowed:
            pair.notes.append(f"均值耦合项 [g(1) − g(−1)]·f̄ − rule = {coupling:.6g} 不为零，该界只控制协方差部分")
            return self._finish("eq2.14", pair, value, forced_loose=True)
        return self._finish("eq2.14", pair, value, forced_loose=not declared)

    def _ujevic_entry(self, pair: _Pair) -> BoundEntry:
        if not pair.options.identity_g:
            raise _Inapplicable("只适用于 Riemann 情形 g(t) = t，需要声明积分子为恒等函数")
        try:
            f_prime = pair.f.require_derivative()
        except MissingDerivativeError as exc:
            raise _Inapplicable("被积函数没有可用的导数") from exc
        declared = declares(pair.specs_f, L2DerivativeSpec)
        if not declared:
            if not pair.options.estimate_constants:
                raise _Inapplicable("缺少 f 的 L2Derivative 声明")
            pair.notes.append("f′ ∈ L₂ 未声明")
        value = pair.original.half_width * bound_ujevic(f_prime, pair.tol)
        return self._finish("eq1.1", pair, value, forced_loose=not declared)

    def _monotone_entry(self, pair: _Pair) -> BoundEntry:
        declared = declares(pair.specs_g, MonotoneSpec)
        if not declared:
            if not pair.options.estimate_constants:
                raise _Inapplicable("缺少 g 单调不减的声明")
            if not looks_nondecreasing(pair.g, CANONICAL):
                raise _Inapplicable("g 在采样网格上不是单调不减的")
            pair.notes.append("单调性只在采样网格上检验过")
        value = bound_monotone(pair.f, pair.g, pair.coeffs, pair.tol)
        return self._finish("remark-a", pair, value, forced_loose=not declared)

    @staticmethod
    def _finish(
        theorem_id: BoundId,
        pair: _Pair,
        value: float,
        *,
        signed_sensitive: bool = False,
        forced_loose: bool = False,
    ) -> BoundEntry:
        rigorous = not pair.notes and not forced_loose
        if signed_sensitive and not pair.coeffs.nonnegative:
            pair.notes.append(NOTE_SIGNED)
            rigorous = False
        if not math.isfinite(value):
            return BoundEntry(theorem_id=theorem_id, applicable=False, applicability_note="误差界不是有限值")
        note = "；".join(pair.notes) if pair.notes else "假设均由声明保证"
        return BoundEntry(
            theorem_id=theorem_id, bound_value=value, rigorous=rigorous, applicable=True, applicability_note=note
        )


def build_report(
    f: RealFunction,
    g: RealFunction,
    iv: Interval,
    specs_f: Sequence[SmoothnessSpec] = (),
    specs_g: Sequence[SmoothnessSpec] = (),
    options: Optional[ReportOptions] = None,
) -> ErrorBoundReport:
    return BoundReportService().build_report(f, g, iv, specs_f, specs_g, options)
