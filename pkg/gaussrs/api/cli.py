"""
命令行入口：解析 f、g 与正则性声明，运行求积、基线对照、误差界报告与收敛阶扫描。

退出码：0 成功，1 解析或参数错误，2 定义域/求值/积分错误，3 参照值不收敛。
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError

from gaussrs.core.exceptions import GaussRSError
from gaussrs.core.logger import logger, set_log_level
from gaussrs.schemas.run import RunConfig
from gaussrs.schemas.smoothness import (
    BoundedVariationSpec,
    HoelderSpec,
    LipschitzSpec,
    MonotoneSpec,
    SmoothnessSpec,
)
from gaussrs.services.emitters import emit
from gaussrs.services.quadrature_constants import BOUND_ORDER, COMPARATORS
from gaussrs.services.run_service import RunService

EXIT_USAGE = 1


def split_list(values: tuple[str, ...]) -> list[str]:
    """把可重复、逗号分隔的选项值展开成列表。"""
    return [item.strip() for value in values for item in value.split(",") if item.strip()]


def parse_bounds(values: tuple[str, ...]) -> list[str]:
    items = split_list(values)
    if "all" in items:
        return list(BOUND_ORDER)
    unknown = [item for item in items if item not in BOUND_ORDER]
    if unknown:
        raise click.BadParameter(f"未知的误差界 {', '.join(unknown)}，可选 {', '.join(BOUND_ORDER)} 或 all")
    return items


def parse_compare(values: tuple[str, ...]) -> list[str]:
    items = split_list(values)
    unknown = [item for item in items if item not in COMPARATORS]
    if unknown:
        raise click.BadParameter(f"未知的基线 {', '.join(unknown)}，可选 {', '.join(COMPARATORS)}")
    return items


def parse_hoelder(value: Optional[str]) -> Optional[HoelderSpec]:
    if value is None:
        return None
    try:
        r, H = (float(part) for part in value.split(","))
    except ValueError as exc:
        raise click.BadParameter(f"--hoelder 需要 r,H 形式的两个数，收到 {value!r}") from exc
    return HoelderSpec(r=r, H=H)


def parse_sweep(value: Optional[str]) -> Optional[list[int]]:
    if value is None:
        return None
    try:
        return [int(item) for item in split_list((value,))]
    except ValueError as exc:
        raise click.BadParameter(f"--sweep 需要逗号分隔的整数，收到 {value!r}") from exc


@click.command(name="gaussrs")
@click.option("--f", "f_text", required=True, help="被积函数 f(t)，例如 't^2'")
@click.option("--g", "g_text", required=True, help="积分子 g(t)，例如 't^3'")
@click.option("--a", type=float, default=-1.0, show_default=True, help="区间左端点")
@click.option("--b", type=float, default=1.0, show_default=True, help="区间右端点")
@click.option("--n", type=int, default=1, show_default=True, help="复合求积的等宽段数")
@click.option("--tol", type=float, default=None, help="内层积分与参照值的容限（默认取配置）")
@click.option("--bounds", "bounds", multiple=True, help="误差界标识，逗号分隔或重复给出；all 表示全部")
@click.option("--hoelder", default=None, help="f 为 r-H Hölder：'r,H'")
@click.option("--lipschitz-f", type=float, default=None, help="f 的 Lipschitz 常数")
@click.option("--lipschitz-g", type=float, default=None, help="g 的 Lipschitz 常数")
@click.option("--variation", type=float, default=None, help="g 的全变差上界")
@click.option("--monotone-g", is_flag=True, help="声明 g 单调不减")
@click.option("--identity-g", is_flag=True, help="声明 g(t) = t，开启 eq1.1；g 写作 t 或 x 时自动识别")
@click.option("--compare", "compare", multiple=True, help="基线公式：mercer、classical")
@click.option("--oracle/--no-oracle", default=False, help="计算参照值与实际误差")
@click.option("--oracle-method", type=click.Choice(["rs", "ibp"]), default="rs", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table", show_default=True)
@click.option("--sweep", default=None, help="收敛阶扫描的段数，逗号分隔且严格递增")
@click.option("--workers", type=int, default=None, help="复合求积线程数")
@click.option("--no-estimate", is_flag=True, help="不使用数值估计的常数")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="输出文件")
@click.option("-v", "--verbose", is_flag=True, help="输出 DEBUG 日志")
@click.pass_context
def cli(
    ctx: click.Context,
    f_text: str,
    g_text: str,
    a: float,
    b: float,
    n: int,
    tol: Optional[float],
    bounds: tuple[str, ...],
    hoelder: Optional[str],
    lipschitz_f: Optional[float],
    lipschitz_g: Optional[float],
    variation: Optional[float],
    monotone_g: bool,
    identity_g: bool,
    compare: tuple[str, ...],
    oracle: bool,
    oracle_method: str,
    fmt: str,
    sweep: Optional[str],
    workers: Optional[int],
    no_estimate: bool,
    out: Optional[Path],
    verbose: bool,
) -> None:
    """用两点 Gauss–Legendre 型公式近似 ∫ f dg，并给出误差界报告。"""
    if verbose:
        set_log_level("DEBUG")

    try:
        specs_f: list[SmoothnessSpec] = []
        specs_g: list[SmoothnessSpec] = []
        if (spec := parse_hoelder(hoelder)) is not None:
            specs_f.append(spec)
        if lipschitz_f is not None:
            specs_f.append(LipschitzSpec(L=lipschitz_f))
        if lipschitz_g is not None:
            specs_g.append(LipschitzSpec(L=lipschitz_g))
        if variation is not None:
            specs_g.append(BoundedVariationSpec(V=variation))
        if monotone_g:
            specs_g.append(MonotoneSpec())

        run_config = RunConfig(
            f_text=f_text,
            g_text=g_text,
            a=a,
            b=b,
            n=n,
            tol=tol,
            bounds_requested=parse_bounds(bounds),
            specs_f=specs_f,
            specs_g=specs_g,
            compare=parse_compare(compare),
            oracle=oracle,
            oracle_method=oracle_method,
            format=fmt,
            sweep=parse_sweep(sweep),
            identity_g=identity_g,
            estimate_constants=not no_estimate,
            workers=workers,
            out=out,
        )
    except (ValidationError, click.BadParameter) as exc:
        click.echo(f"参数错误: {exc}", err=True)
        ctx.exit(EXIT_USAGE)

    try:
        report = RunService(run_config).run()
    except GaussRSError as exc:
        logger.debug("运行失败", exc_info=True)
        click.echo(f"错误: {exc}", err=True)
        ctx.exit(exc.exit_code)

    text = emit(report, run_config.format)
    if run_config.out is not None:
        run_config.out.write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
