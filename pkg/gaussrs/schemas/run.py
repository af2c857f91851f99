from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gaussrs.schemas.report import BoundEntry
from gaussrs.schemas.smoothness import SmoothnessSpec
from gaussrs.services.quadrature_constants import BOUND_ORDER, BoundId

OutputFormat = Literal["table", "csv", "json"]
OracleMethod = Literal["rs", "ibp"]
Comparator = Literal["mercer", "classical"]


class ReportOptions(BaseModel):
    """build_report 的可选行为"""

    tol: Optional[float] = Field(None, gt=0, description="内层积分与参照值的容限，为空时使用配置默认值")
    with_oracle: bool = Field(False, description="是否计算参照值与实际误差")
    oracle_method: OracleMethod = Field("rs", description="参照值算法：rs 为 RS 和式，ibp 为分部积分")
    requested: tuple[BoundId, ...] = Field(BOUND_ORDER, description="需要计算的误差界，输出顺序固定")
    identity_g: bool = Field(False, description="用户声明积分子就是 g(t) = t，开启 eq1.1")
    estimate_constants: bool = Field(True, description="缺少声明时是否用数值估计的常数给出非严格条目")

    model_config = ConfigDict(frozen=True)


class RunConfig(BaseModel):
    """一次命令行运行的完整配置"""

    f_text: str = Field(..., min_length=1, description="被积函数 f 的表达式")
    g_text: str = Field(..., min_length=1, description="积分子 g 的表达式")
    a: float = Field(-1.0, description="区间左端点")
    b: float = Field(1.0, description="区间右端点")
    n: int = Field(1, ge=1, description="复合求积的等宽段数")
    tol: Optional[float] = Field(None, gt=0, description="容限，为空时使用配置默认值")
    bounds_requested: list[BoundId] = Field(default_factory=list, description="请求的误差界标识")
    specs_f: list[SmoothnessSpec] = Field(default_factory=list, description="f 的正则性声明")
    specs_g: list[SmoothnessSpec] = Field(default_factory=list, description="g 的正则性声明")
    compare: list[Comparator] = Field(default_factory=list, description="需要输出的基线公式")
    oracle: bool = Field(False, description="是否计算参照值")
    oracle_method: OracleMethod = "rs"
    format: OutputFormat = "table"
    sweep: Optional[list[int]] = Field(None, description="收敛阶扫描使用的段数列表，须严格递增")
    identity_g: bool = False
    estimate_constants: bool = True
    workers: Optional[int] = Field(None, ge=1, description="复合求积线程数")
    out: Optional[Path] = Field(None, description="输出文件，为空时写到标准输出")

    @field_validator("bounds_requested", "compare")
    @classmethod
    def _dedupe(cls, value: list) -> list:
        return list(dict.fromkeys(value))

    @field_validator("sweep")
    @classmethod
    def _check_sweep(cls, value: Optional[list[int]]) -> Optional[list[int]]:
        if value is None:
            return value
        if not value:
            raise ValueError("sweep 不能为空")
        if any(n < 1 for n in value):
            raise ValueError("sweep 中的段数必须 ≥ 1")
        if any(later <= earlier for earlier, later in zip(value, value[1:])):
            raise ValueError("sweep 必须严格递增")
        return value

    @model_validator(mode="after")
    def _check_interval(self) -> "RunConfig":
        if not self.a < self.b:
            raise ValueError(f"区间要求 a < b，收到 [{self.a}, {self.b}]")
        return self

    @property
    def needs_oracle(self) -> bool:
        """请求误差界或扫描时都需要参照值。"""
        return self.oracle or bool(self.bounds_requested) or self.sweep is not None

    def report_options(self) -> ReportOptions:
        requested = tuple(i for i in BOUND_ORDER if i in self.bounds_requested)
        return ReportOptions(
            tol=self.tol,
            with_oracle=self.needs_oracle,
            oracle_method=self.oracle_method,
            requested=requested,
            identity_g=self.identity_g,
            estimate_constants=self.estimate_constants,
        )


class CompositeRow(BaseModel):
    n: int
    value: float


class SweepRow(BaseModel):
    n: int
    value: float
    error: Optional[float] = None
    order: Optional[float] = Field(None, description="相邻两行的经验收敛阶，首行为空")


class RunReport(BaseModel):
    """一次运行的输出内容，由 emitters 编码为表格、CSV 或 JSON"""

    rule: float
    composite: list[CompositeRow] = Field(default_factory=list)
    baselines: dict[str, float] = Field(default_factory=dict)
    oracle: Optional[float] = None
    error: Optional[float] = None
    bounds: list[BoundEntry] = Field(default_factory=list)
    sweep: Optional[list[SweepRow]] = None
