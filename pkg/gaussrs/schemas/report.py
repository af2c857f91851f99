from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from gaussrs.services.quadrature_constants import BoundId

# 严格误差界允许的相对与绝对余量
DOMINATION_SLACK = 1e-9


class BoundEntry(BaseModel):
    """单个误差界的计算结果"""

    theorem_id: BoundId = Field(..., description="误差界标识，例如 thm2.2、eq2.14")
    bound_value: Optional[float] = Field(None, description="误差界数值，不适用时为空")
    rigorous: bool = Field(False, description="所有假设均由用户声明的常数保证时为 True")
    applicable: bool = Field(True, description="是否给出了数值；不适用的条目 bound_value 为空")
    applicability_note: str = Field("", description="适用性说明，例如缺少哪项声明、为何不严格")

    model_config = ConfigDict(frozen=True)


class ErrorBoundReport(BaseModel):
    """求积值、参照值与各误差界的汇总"""

    rule_value: float = Field(..., description="两点公式的求积值")
    oracle_value: Optional[float] = Field(None, description="参照值，未请求时为空")
    actual_error: Optional[float] = Field(None, description="|oracle − rule|，未请求参照值时为空")
    bounds: list[BoundEntry] = Field(default_factory=list, description="按固定顺序排列的误差界条目")

    model_config = ConfigDict(frozen=True)

    def entry(self, theorem_id: str) -> Optional[BoundEntry]:
        return next((e for e in self.bounds if e.theorem_id == theorem_id), None)

    def violations(self) -> list[BoundEntry]:
        """严格条目中被实际误差超过的那些；未计算参照值时恒为空。"""
        if self.actual_error is None:
            return []
        return [
            e
            for e in self.bounds
            if e.rigorous
            and e.bound_value is not None
            and self.actual_error > e.bound_value + DOMINATION_SLACK * (1 + e.bound_value)
        ]
