"""
曲线层面的数值工具
Riemann–Roch、Clifford不等式、Castelnuovo亏格界、平面曲线对偶层次数
"""

from fractions import Fraction

from app.core.exceptions import PreconditionError
from app.models import CurveDivisorData


def rr_curve_chi(deg: int, genus: int) -> int:
    """曲线上线丛的 χ = deg + 1 - g"""
    data = CurveDivisorData(deg=deg, genus=genus)
    return data.deg + 1 - data.genus


def clifford_max_h0(deg: int) -> Fraction:
    """特殊除子 h⁰ 的Clifford上界 deg/2 + 1"""
    if deg < 0:
        raise PreconditionError(f"Clifford界要求 deg ≥ 0，实际 deg = {deg}")
    return Fraction(deg, 2) + 1


def clifford_ok(deg: int, h0: int) -> bool:
    return h0 <= clifford_max_h0(deg)


def castelnuovo_max_genus(d: int, N: int) -> int:
    """
    Pⁿ 中次数d的非退化不可约曲线的经典Castelnuovo亏格界

    μ = ⌊(d-1)/(N-1)⌋, ε = d-1-μ(N-1), π = μ(μ-1)(N-1)/2 + με
    """
    if d < 1:
        raise PreconditionError(f"Castelnuovo界要求 d ≥ 1，实际 d = {d}")
    if N < 2:
        raise PreconditionError(f"Castelnuovo界要求 N ≥ 2，实际 N = {N}")
    mu, eps = divmod(d - 1, N - 1)
    return mu * (mu - 1) * (N - 1) // 2 + mu * eps


def plane_curve_omega_degree(dB: int) -> int:
    """次数dB的平面曲线：deg ω = dB(dB-3)"""
    if dB < 1:
        raise PreconditionError(f"平面曲线次数必须 ≥ 1，实际 {dB}")
    return dB * (dB - 3)


def genus_from_canonical_degree(two_g_minus_2: int) -> int:
    if two_g_minus_2 % 2 != 0 or two_g_minus_2 < -2:
        raise PreconditionError(f"2g-2 = {two_g_minus_2} 不对应非负整数亏格")
    return two_g_minus_2 // 2 + 1
