from pydantic import BaseModel, ConfigDict, Field, model_validator

from gaussrs.models.function import RealFunction
from gaussrs.models.interval import Interval
from gaussrs.schemas.smoothness import L2DerivativeSpec, SmoothnessSpec


class CorpusFunction(BaseModel):
    """语料中的一个函数及其在 [-1, 1] 上的正则性声明"""

    expr: str = Field(..., min_length=1, description="函数表达式")
    identity: bool = Field(False, description="是否为恒等积分子 g(t) = t")
    specs: list[SmoothnessSpec] = Field(default_factory=list, description="解析推导得到的正则性声明")

    model_config = ConfigDict(frozen=True)


class CorpusPair(BaseModel):
    """一个验证用的 (f, g, [a, b]) 组合，常数均为该区间上的真实上界"""

    f: str
    g: str
    a: float = -1.0
    b: float = 1.0
    identity: bool = False
    specs_f: list[SmoothnessSpec] = Field(default_factory=list)
    specs_g: list[SmoothnessSpec] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_interval(self) -> "CorpusPair":
        if not self.a < self.b:
            raise ValueError(f"区间要求 a < b，收到 [{self.a}, {self.b}]")
        return self

    @property
    def label(self) -> str:
        return f"f={self.f} g={self.g} [{self.a:g}, {self.b:g}]"

    @property
    def smooth(self) -> bool:
        """f 声明了平方可积导数，分部积分参照值可用。"""
        return any(isinstance(spec, L2DerivativeSpec) for spec in self.specs_f)

    def interval(self) -> Interval:
        return Interval(self.a, self.b)

    def functions(self) -> tuple[RealFunction, RealFunction]:
        return RealFunction.from_text(self.f), RealFunction.from_text(self.g)


class CorpusFile(BaseModel):
    """assets/corpus.yaml 的结构"""

    expressions: list[str] = Field(default_factory=list)
    integrands: list[CorpusFunction] = Field(default_factory=list)
    integrators: list[CorpusFunction] = Field(default_factory=list)
    pairs: list[CorpusPair] = Field(default_factory=list)

