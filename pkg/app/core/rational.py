"""
精确有理数工具
全部计算使用 fractions.Fraction，不出现浮点数
"""

import re
from fractions import Fraction
from math import factorial, floor
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def as_rational(value: RationalLike) -> Fraction:
    """转换为Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"不支持的有理数类型: {type(value).__name__}")
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    """解析 "p/q" 或整数文本，拒绝小数"""
    match = _RATIONAL_PATTERN.match(str(text))
    if not match:
        raise ValueError(f"无法解析为精确有理数: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"分母为零: {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """格式化为 "p/q"，整数值输出为 "n" """
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def floor_rational(value: RationalLike) -> int:
    """精确向下取整"""
    return floor(as_rational(value))


def binomial_poly(x: RationalLike, k: int) -> Fraction:
    """二项式系数对有理上指标的多项式延拓: x(x-1)...(x-k+1)/k!"""
    if k < 0:
        raise ValueError("k必须非负")
    x = as_rational(x)
    product = Fraction(1)
    for i in range(k):
        product *= x - i
    return product / factorial(k)


def is_integral(value: RationalLike) -> bool:
    return as_rational(value).denominator == 1
