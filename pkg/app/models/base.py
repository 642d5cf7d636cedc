"""
数据模型基类与精确有理数字段
"""

from fractions import Fraction
from typing import Annotated, Any
from pydantic import BaseModel, ConfigDict, BeforeValidator, PlainSerializer

from app.core.rational import format_rational, parse_rational


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("布尔值不是有理数")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"不是精确有理数: {value!r}")


# 精确有理数字段：输入接受 int / Fraction / "p/q"，JSON输出为 "p/q"
RationalValue = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]


class ExactModel(BaseModel):
    """不可变数据模型"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
