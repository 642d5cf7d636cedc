"""
曲面不变量相关的数据模型
"""

from typing import Optional
from pydantic import Field, model_validator

from .base import ExactModel


class SurfaceInvariants(ExactModel):
    """曲面数值不变量 (d=H², H·K, K², χ, q)，c₂只由Noether公式得到"""
    d: int = Field(..., ge=1, description="次数 H²")
    hk: int = Field(..., description="H·K_X")
    k2: int = Field(..., description="K_X²")
    chi: int = Field(..., description="χ(O_X)")
    q: Optional[int] = Field(default=None, ge=0, description="不规则数")

    @model_validator(mode="after")
    def _check_pg(self) -> "SurfaceInvariants":
        if self.q is not None and self.chi - 1 + self.q < 0:
            raise ValueError(f"p_g = χ-1+q = {self.chi - 1 + self.q} < 0")
        return self


class HilbertTriple(ExactModel):
    """Hilbert多项式系数 (d, H·K, χ)"""
    d: int = Field(..., ge=1, description="次数")
    hk: int = Field(..., description="H·K_X")
    chi: int = Field(..., description="χ(O_X)")


class CurveDivisorData(ExactModel):
    """曲线上线丛的次数与曲线亏格"""
    deg: int = Field(..., description="次数")
    genus: int = Field(..., ge=0, description="亏格")
