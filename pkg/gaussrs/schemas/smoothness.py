from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field


class HoelderSpec(BaseModel):
    """r-H Hölder 条件 |h(x) − h(y)| ≤ H|x − y|^r"""

    kind: Literal["hoelder"] = "hoelder"
    r: float = Field(..., gt=0, description="Hölder 指数 r，r = 1 即 Lipschitz")
    H: float = Field(..., gt=0, description="Hölder 常数 H")

    model_config = ConfigDict(frozen=True)


class LipschitzSpec(BaseModel):
    """L-Lipschitz 条件，在所有误差界公式中等价于 r = 1、H = L 的 Hölder 条件"""

    kind: Literal["lipschitz"] = "lipschitz"
    L: float = Field(..., gt=0, description="Lipschitz 常数 L")

    model_config = ConfigDict(frozen=True)


class BoundedVariationSpec(BaseModel):
    """有界变差，V 为区间上全变差的上界"""

    kind: Literal["bounded_variation"] = "bounded_variation"
    V: float = Field(..., ge=0, description="全变差上界 V")

    model_config = ConfigDict(frozen=True)


class L2DerivativeSpec(BaseModel):
    """绝对连续且导数平方可积；导数取自函数本身附带的导函数"""

    kind: Literal["l2_derivative"] = "l2_derivative"

    model_config = ConfigDict(frozen=True)


class MonotoneSpec(BaseModel):
    """单调不减（只对积分子有意义）"""

    kind: Literal["monotone"] = "monotone"

    model_config = ConfigDict(frozen=True)


SmoothnessSpec = Annotated[
    Union[HoelderSpec, LipschitzSpec, BoundedVariationSpec, L2DerivativeSpec, MonotoneSpec],
    Field(discriminator="kind"),
]
