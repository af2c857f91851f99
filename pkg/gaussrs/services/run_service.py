"""
命令行运行的编排：解析表达式、计算求积值与基线、误差界报告，以及复合求积的收敛阶扫描。
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from gaussrs.core.config import config as settings
from gaussrs.core.logger import logger
from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.schemas.run import CompositeRow, ReportOptions, RunConfig, RunReport, SweepRow
from gaussrs.schemas.smoothness import L2DerivativeSpec, SmoothnessSpec
from gaussrs.services.expression import Variable
from gaussrs.services.expression_parser import parse
from gaussrs.services.quadrature import classical_gl2, gl2_rs_composite, mercer_trapezoid
from gaussrs.services.report_service import BoundReportService


def empirical_order(
    n_prev: int,
    e_prev: Optional[float],
    n_cur: int,
    e_cur: Optional[float],
    tol: Optional[float] = None,
) -> Optional[float]:
    """log(e_prev/e_cur) / log(n_cur/n_prev)；任一误差缺失或不超过 10·tol（视为零）时无定义。"""
    floor = 10 * (settings.default_tol if tol is None else tol)
    if e_prev is None or e_cur is None or e_prev <= floor or e_cur <= floor:
        return None
    return math.log(e_prev / e_cur) / math.log(n_cur / n_prev)


def with_derivative_spec(fn: RealFunction, specs: Sequence[SmoothnessSpec]) -> list[SmoothnessSpec]:
    """可微的表达式自动声明 L2Derivative。"""
    result = list(specs)
    if fn.has_derivative and not any(isinstance(s, L2DerivativeSpec) for s in result):
        result.append(L2DerivativeSpec())
    return result


class RunService:
    """执行一次 RunConfig 描述的计算，结果与输出格式无关"""

    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self.interval = Interval(config.a, config.b)
        self.f = RealFunction.from_text(config.f_text)
        self.g = RealFunction.from_text(config.g_text)
        self.reports = BoundReportService()

    def run(self) -> RunReport:
        cfg = self.config
        report = self.reports.build_report(
            self.f,
            self.g,
            self.interval,
            with_derivative_spec(self.f, cfg.specs_f),
            with_derivative_spec(self.g, cfg.specs_g),
            self.report_options(),
        )
        composite = [CompositeRow(n=cfg.n, value=self._composite(cfg.n))]
        baselines: dict[str, float] = {}
        for name in cfg.compare:
            if name == "mercer":
                baselines[name] = mercer_trapezoid(self.f, self.g, self.interval, cfg.tol)
            else:
                baselines[name] = classical_gl2(self.f, self.interval)

        sweep = self.sweep(report.oracle_value) if cfg.sweep is not None else None
        return RunReport(
            rule=report.rule_value,
            composite=composite,
            baselines=baselines,
            oracle=report.oracle_value,
            error=report.actual_error,
            bounds=report.bounds,
            sweep=sweep,
        )

    def report_options(self) -> ReportOptions:
        """g 的文本解析为单独的变量 t 时，视同声明了 --identity-g。"""
        options = self.config.report_options()
        if not options.identity_g and parse(self.config.g_text) == Variable():
            options = options.model_copy(update={"identity_g": True})
        return options

    def sweep(self, oracle: Optional[float]) -> list[SweepRow]:
        """对 sweep 中的每个段数计算复合求积值、相对参照值的误差与经验收敛阶。"""
        rows: list[SweepRow] = []
        for n in self.config.sweep or []:
            value = self._composite(n)
            error = None if oracle is None else abs(oracle - value)
            order = None
            if rows:
                order = empirical_order(rows[-1].n, rows[-1].error, n, error, self.config.tol)
            rows.append(SweepRow(n=n, value=value, error=error, order=order))
            logger.debug("扫描 n=%s value=%.15g error=%s order=%s", n, value, error, order)
        return rows

    def _composite(self, n: int) -> float:
        return gl2_rs_composite(self.f, self.g, self.interval, n, self.config.tol, workers=self.config.workers)


def run(config: RunConfig) -> RunReport:
    return RunService(config).run()
