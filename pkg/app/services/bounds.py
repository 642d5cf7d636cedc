"""
闭式界与稳定性不等式
Decker–Schreyer多项式、Ellingsrud–Peskine亏格界、χ上界、d(α)、
Bogomolov判别式、T_ξ的陈类、一般型不等式、BMY、Miyaoka、Varchenko
"""

from fractions import Fraction
from typing import Callable, Tuple

from loguru import logger

from app.core.exceptions import PreconditionError
from app.core.rational import RationalLike, as_rational, binomial_poly, floor_rational
from app.models import SheafChern, StabilityBranch, SurfaceInvariants
from app.services.invariants import noether_c2

# 四次三维超曲面（孤立常点）的最大结点数
VARCHENKO_NODES = 45

# d(α) 的扫描下限
_D_ALPHA_FLOOR = {4: 10, 5: 17}

# 扫描安全上限，防止参数异常时死循环
_D_ALPHA_SCAN_LIMIT = 10 ** 6


def _require_m(m: int, allowed: Tuple[int, ...]):
    if m not in allowed:
        raise PreconditionError(f"m = {m} 不在允许范围 {allowed} 内")


def decker_schreyer_general(m: int, d: RationalLike) -> Fraction:
    """
    一般的Decker–Schreyer多项式
    m·C(d/m + (m-3)/2, 3) - ((m-1)²/2m)·d(d-3) - C(m-1, 4) + 1
    """
    _require_m(m, (2, 3, 4, 5))
    d = as_rational(d)
    return (m * binomial_poly(d / m + Fraction(m - 3, 2), 3)
            - Fraction((m - 1) ** 2, 2 * m) * d * (d - 3)
            - binomial_poly(m - 1, 4)
            + 1)


def quintic_closed_form(d: RationalLike) -> Fraction:
    """五次情形的闭式 P₅(d) = d(d² - 40d + 95)/25"""
    d = as_rational(d)
    return d * (d ** 2 - 40 * d + 95) / 25


def pm_polynomial(m: int, d: RationalLike) -> Fraction:
    """χ的下界多项式 P_m(d)；m=5 使用五次论证所用的闭式"""
    _require_m(m, (2, 3, 4, 5))
    if m == 5:
        return quintic_closed_form(d)
    return decker_schreyer_general(m, d)


def chi_lower_bound_applies(m: int, d: int) -> bool:
    """χ ≥ P_m(d) 的适用条件 d ≥ (m-1)² + 2"""
    return d >= (m - 1) ** 2 + 2


def ep_genus_bound(m: int, d: RationalLike) -> Fraction:
    """2g(H)-2 的上界：m=4 为 d²/4，m=5 为 (d²+5d)/5"""
    _require_m(m, (4, 5))
    d = as_rational(d)
    if m == 4:
        return d ** 2 / 4
    return (d ** 2 + 5 * d) / 5


def _check_alpha(m: int, alpha: Fraction):
    if m == 4 and alpha >= 6:
        raise PreconditionError(f"m=4 要求 α < 6，实际 α = {alpha}")
    if m == 5 and alpha == 6:
        raise PreconditionError("m=5 要求 α ≠ 6")


def chi_upper_bound(m: int, alpha: RationalLike, d: RationalLike) -> Fraction:
    """固定斜率与次数时χ的上界"""
    _require_m(m, (4, 5))
    alpha, d = as_rational(alpha), as_rational(d)
    _check_alpha(m, alpha)
    if m == 4:
        return (d ** 2 + 20 * d) / (8 * (6 - alpha))
    if alpha < 6:
        return 5 * d / (6 - alpha)
    return d / (3 * (alpha - 6))


def _d_alpha_gap(m: int, alpha: Fraction) -> Callable[[int], Fraction]:
    """返回 g(d) = 左边 - 右边；g(d) ≤ 0 即不等式成立"""
    if m == 4:
        return lambda d: ((6 - alpha) * (Fraction(d ** 3, 12) - Fraction(19 * d ** 2, 2)
                                         + Fraction(80 * d, 3) + 10)
                          - (d ** 2 + 20 * d))
    if alpha < 6:
        return lambda d: (6 - alpha) / 25 * (d ** 2 - 40 * d + 95) - 5 * d
    return lambda d: (alpha - 6) / 25 * (d ** 2 - 40 * d + 95) - Fraction(1, 3)


def d_alpha(m: int, alpha: RationalLike) -> int:
    """
    斜率α的曲面的次数上界 max(下限, d₀)

    d₀ 为不等式成立的最大整数。向上精确扫描：首项系数为正，
    一旦 g(d) > 0 且一阶、二阶前向差分都为正，之后g单调递增，停止。
    """
    _require_m(m, (4, 5))
    alpha = as_rational(alpha)
    _check_alpha(m, alpha)
    gap = _d_alpha_gap(m, alpha)
    floor_base = _D_ALPHA_FLOOR[m]

    last_ok = None
    d = floor_base
    while d < _D_ALPHA_SCAN_LIMIT:
        g0, g1, g2 = gap(d), gap(d + 1), gap(d + 2)
        if g0 <= 0:
            last_ok = d
        elif g1 - g0 > 0 and g2 - 2 * g1 + g0 > 0:
            break
        d += 1
    else:
        raise PreconditionError(f"d(α) 扫描未收敛: m={m}, α={alpha}")

    result = floor_base if last_ok is None else max(floor_base, last_ok)
    logger.debug(f"d_alpha(m={m}, α={alpha}) = {result}")
    return result


def bogomolov_discriminant(s: SheafChern) -> Fraction:
    """Δ(F) = 2r·c₂ - (r-1)·c₁²"""
    return 2 * s.rank * s.c2 - (s.rank - 1) * s.c1_sq


def txi_chern(m: int, inv: SurfaceInvariants) -> SheafChern:
    """
    扩张丛 T_ξ 的陈类数据，t = 5 - m:
    c₁ = -tH, c₂ = c₂(X) - K² - t·H·K
    """
    _require_m(m, (2, 3, 4, 5))
    t = 5 - m
    return SheafChern(
        rank=3,
        c1_sq=t * t * inv.d,
        c1_dot_H=-t * inv.d,
        c1_dot_K=-t * inv.hk,
        c2=noether_c2(inv) - inv.k2 - t * inv.hk,
    )


def general_type_c2_minus_k2_lower_bound(m: int, inv, branch: StabilityBranch) -> Fraction:
    """一般型曲面 c₂ - K² 的下界，按稳定性分支取值"""
    _require_m(m, (2, 3, 4))
    hk, d = Fraction(inv.hk), Fraction(inv.d)
    unstable = branch.is_unstable
    if m == 4:
        if not unstable:
            return hk + d / 3
        return min(3 * hk / 4, hk / 2 + d / 4)
    if m == 3:
        if not unstable:
            return 2 * hk + 4 * d / 3
        return min(hk + d, 3 * hk / 2 + d / 3)
    if not unstable:
        return 3 * hk + 3 * d
    return 3 * hk / 2 + 9 * d / 4


def bmy_ok(inv) -> bool:
    """Bogomolov–Miyaoka–Yau: K² ≤ 9χ"""
    return inv.k2 <= 9 * inv.chi


def miyaoka_c2_min(L_sq: RationalLike) -> Fraction:
    """Miyaoka: c₂(F) ≥ L²/3"""
    return as_rational(L_sq) / 3


def varchenko_bound() -> int:
    return VARCHENKO_NODES


def thm44_bound_check(inv: SurfaceInvariants, L_sq: RationalLike) -> bool:
    """K² - c₂ ≤ 0，或 0 < K² - c₂ ≤ 2L²/3 且 L² ≤ d"""
    L_sq = as_rational(L_sq)
    excess = inv.k2 - noether_c2(inv)
    if excess <= 0:
        return True
    return excess <= 2 * L_sq / 3 and L_sq <= inv.d


def albanese_q3_numeric_ok(inv: SurfaceInvariants, l_dot_h: RationalLike, l_sq: RationalLike) -> bool:
    """五次、Albanese维数2、q=3 情形的数值条件: L·H ≤ d 且 K² - c₂ ≤ 2L²/3"""
    l_dot_h, l_sq = as_rational(l_dot_h), as_rational(l_sq)
    return l_dot_h <= inv.d and inv.k2 - noether_c2(inv) <= 2 * l_sq / 3


def quartic_bundle_discriminant(d: int, deg_z: int) -> Fraction:
    """J_Z(4H) 被 O 扩张所得秩2丛 E 的判别式 4(deg Z - 4d)"""
    bundle = SheafChern(rank=2, c1_sq=16 * d, c1_dot_H=4 * d, c1_dot_K=0, c2=deg_z)
    return bogomolov_discriminant(bundle)


def quartic_stability_threshold() -> int:
    """使 4d > 45 的最小次数：从此次数起 E 必然Bogomolov不稳定"""
    d = 1
    while quartic_bundle_discriminant(d, varchenko_bound()) >= 0:
        d += 1
    return d


def quintic_slope_exception_window(alpha: RationalLike) -> Tuple[int, int]:
    """α > 6 时仍可能出现该斜率的 (最大次数, 最大χ)"""
    alpha = as_rational(alpha)
    if alpha <= 6:
        raise PreconditionError(f"例外窗口只对 α > 6 定义，实际 α = {alpha}")
    d_max = d_alpha(5, alpha)
    return d_max, floor_rational(chi_upper_bound(5, alpha, d_max))
