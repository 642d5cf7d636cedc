"""
有限性枚举的数据模型
"""

from enum import Enum
from typing import Optional, Tuple
from pydantic import Field, model_validator

from .base import ExactModel, RationalValue


class FamilyFilters(ExactModel):
    """附加过滤条件"""
    use_hodge: bool = Field(default=False, description="要求 (H·K)² ≥ d·K²")
    require_hk_positive: bool = Field(default=False, description="要求 H·K ≥ 1")


class FamilyQuery(ExactModel):
    """按 (m, α) 查询曲面族"""
    m: int = Field(..., ge=2, le=5, description="超曲面次数")
    alpha: RationalValue = Field(..., description="斜率 K²/χ")
    extra_filters: FamilyFilters = Field(default_factory=FamilyFilters)

    @model_validator(mode="after")
    def _check_alpha(self) -> "FamilyQuery":
        if self.m == 4 and self.alpha >= 6:
            raise ValueError("m=4 要求 α < 6")
        if self.m == 5 and self.alpha == 6:
            raise ValueError("m=5 要求 α ≠ 6")
        return self


class ConicBundleSolution(ExactModel):
    """四次超曲面上二次曲线丛的数值解"""
    d: int
    q: int
    delta: int
    d_prime: int
    k2: int
    hk: int
    c2: int
    deg_z: int

    @model_validator(mode="after")
    def _check_relations(self) -> "ConicBundleSolution":
        if self.delta != 3 * self.d - 4 * self.d_prime:
            raise ValueError("delta ≠ 3d - 4d'")
        if self.deg_z != self.d + 6 * self.d_prime:
            raise ValueError("deg_z ≠ d + 6d'")
        if self.d ** 2 - 9 * self.d + 2 * self.d_prime != 16 * (self.q - 1):
            raise ValueError("d² - 9d + 2d' ≠ 16(q-1)")
        return self


class ConicBundleCandidate(ExactModel):
    """二次方程的整数解及其首个失败条件"""
    d: int
    q: int
    d_prime: int
    delta: int
    deg_z: int
    castelnuovo_bound: int
    rejected_by: Optional[str] = Field(default=None, description="delta / deg_z / castelnuovo，None表示接受")

    @property
    def accepted(self) -> bool:
        return self.rejected_by is None


class ScrollCandidate(ExactModel):
    """无理直纹面双点公式阶段的 (d, q)"""
    d: int
    q: int
    a: Optional[int] = Field(default=None, description="d=2a+1 时的 a")
    accepted: bool


class DegZBranch(str, Enum):
    STABLE = "Stable"
    UNSTABLE = "Unstable"


class DegZEntry(ExactModel):
    """四次超曲面情形允许的 deg Z"""
    deg_z: int
    branch: DegZBranch
    discriminant: int = Field(..., description="Δ(E) = 4(deg Z - 4d)")


class PlaneBundleDegrees(ExactModel):
    """二次曲线丛底曲线上的秩3丛 U* 的次数数据"""
    rank: int = 3
    deg_u: int = Field(..., description="deg U* = (d - H·K)/2 + 2(q-1)")
    summand_degrees: Tuple[int, ...] = Field(..., description="U* = O ⊕ F*，F*为两个次数2线丛的扩张")
    cone_degree: int = Field(..., description="平面族扫出的锥V的次数")
