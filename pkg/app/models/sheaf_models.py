"""
层的陈类数据与正合列数据模型
"""

from enum import Enum
from typing import Tuple
from pydantic import Field, model_validator

from .base import ExactModel, RationalValue


class StabilityBranch(str, Enum):
    """Bogomolov滤过的分支"""
    SEMISTABLE = "Semistable"
    UNSTABLE_RANK2_SUB = "UnstableRank2Sub"
    UNSTABLE_RANK1_SUB = "UnstableRank1Sub"
    UNSTABLE_FULL_LADDER = "UnstableFullLadder"

    @property
    def is_unstable(self) -> bool:
        return self is not StabilityBranch.SEMISTABLE


class SheafChern(ExactModel):
    """层的秩与陈类相交数据"""
    rank: int = Field(..., ge=1, description="秩")
    c1_sq: RationalValue = Field(..., description="c₁²")
    c1_dot_H: RationalValue = Field(..., description="c₁·H")
    c1_dot_K: RationalValue = Field(..., description="c₁·K")
    c2: RationalValue = Field(..., description="c₂")


class KoszulDatum(ExactModel):
    """法丛截面零点的除子部分Z₁的相交数据"""
    m: int = Field(..., ge=2, le=5, description="超曲面次数")
    z1_dot_H: int = Field(default=0, description="Z₁·H")
    z1_dot_K: int = Field(default=0, description="Z₁·K")
    z1_sq: int = Field(default=0, description="Z₁²")


class FiltrationData(ExactModel):
    """正锥中的类B₁、B₂的相交数据"""
    case: StabilityBranch
    b1_sq: RationalValue = Field(..., description="B₁²")
    b1_dot_H: RationalValue = Field(..., description="B₁·H")
    b2_sq: RationalValue = Field(default=0, description="B₂²（仅满阶梯情形）")
    b2_dot_H: RationalValue = Field(default=0, description="B₂·H（仅满阶梯情形）")
    b1_dot_b2: RationalValue = Field(default=0, description="B₁·B₂（仅满阶梯情形）")

    @model_validator(mode="after")
    def _check_positive(self) -> "FiltrationData":
        if self.b1_dot_H <= 0:
            raise ValueError("B₁·H必须为正")
        return self


class FiltrationRow(ExactModel):
    """滤过的一个商的c₁：在(H, B₁[, B₂])基下的系数及其数值"""
    label: str
    coefficients: Tuple[RationalValue, ...]
    dot_H: RationalValue
    square: RationalValue
