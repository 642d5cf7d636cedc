"""
短正合列与Koszul列的陈类演算
包括 ndp 形式的 deg Z 公式，以及Bogomolov滤过的基变换与c₂下界
"""

from fractions import Fraction
from math import comb
from typing import List, Tuple

from loguru import logger

from app.core.exceptions import GeometryError, PreconditionError
from app.core.rational import RationalLike, as_rational
from app.models import (
    FiltrationData,
    FiltrationRow,
    KoszulDatum,
    SheafChern,
    StabilityBranch,
    SurfaceInvariants,
)

# 各不稳定分支下 L_i 在 (H, B₁[, B₂]) 基中的系数
_FILTRATION_COEFFICIENTS = {
    StabilityBranch.UNSTABLE_RANK2_SUB: (
        (Fraction(-2, 3), Fraction(1, 3)),
        (Fraction(-1, 3), Fraction(-1, 3)),
    ),
    StabilityBranch.UNSTABLE_RANK1_SUB: (
        (Fraction(-1, 3), Fraction(2, 3)),
        (Fraction(-2, 3), Fraction(-2, 3)),
    ),
    StabilityBranch.UNSTABLE_FULL_LADDER: (
        (Fraction(-1, 3), Fraction(2, 3), Fraction(1, 3)),
        (Fraction(-1, 3), Fraction(-1, 3), Fraction(1, 3)),
        (Fraction(-1, 3), Fraction(-1, 3), Fraction(-2, 3)),
    ),
}


def whitney_c(sub: SheafChern, quot: SheafChern, c1_sub_dot_c1_quot: RationalLike) -> SheafChern:
    """0 → sub → E → quot → 0 中E的陈类；交叉项 c₁(sub)·c₁(quot) 由调用方给出"""
    cross = as_rational(c1_sub_dot_c1_quot)
    return SheafChern(
        rank=sub.rank + quot.rank,
        c1_sq=sub.c1_sq + 2 * cross + quot.c1_sq,
        c1_dot_H=sub.c1_dot_H + quot.c1_dot_H,
        c1_dot_K=sub.c1_dot_K + quot.c1_dot_K,
        c2=sub.c2 + quot.c2 + cross,
    )


def pairing(inv: SurfaceInvariants, a: Tuple[RationalLike, RationalLike],
            b: Tuple[RationalLike, RationalLike]) -> Fraction:
    """(a₀H + a₁K)·(b₀H + b₁K)"""
    a0, a1 = map(as_rational, a)
    b0, b1 = map(as_rational, b)
    return a0 * b0 * inv.d + (a0 * b1 + a1 * b0) * inv.hk + a1 * b1 * inv.k2


def line_bundle_chern(inv: SurfaceInvariants, h_coeff: RationalLike, k_coeff: RationalLike) -> SheafChern:
    """O(aH + bK)"""
    c1 = (h_coeff, k_coeff)
    return SheafChern(
        rank=1,
        c1_sq=pairing(inv, c1, c1),
        c1_dot_H=pairing(inv, c1, (1, 0)),
        c1_dot_K=pairing(inv, c1, (0, 1)),
        c2=0,
    )


def twisted_ideal_chern(inv: SurfaceInvariants, t: RationalLike, deg_z: RationalLike) -> SheafChern:
    """J_Z(tH)，Z为零维且次数deg_z"""
    c1 = line_bundle_chern(inv, t, 0)
    return c1.model_copy(update={"c2": as_rational(deg_z)})


def normal_bundle_chern(inv: SurfaceInvariants) -> SheafChern:
    """法丛 N_X：c₁ = K + 5H，c₂ = d²"""
    c1 = line_bundle_chern(inv, 5, 1)
    return SheafChern(rank=2, c1_sq=c1.c1_sq, c1_dot_H=c1.c1_dot_H,
                      c1_dot_K=c1.c1_dot_K, c2=inv.d ** 2)


def dual_chern(s: SheafChern) -> SheafChern:
    return s.model_copy(update={
        "c1_dot_H": -s.c1_dot_H,
        "c1_dot_K": -s.c1_dot_K,
    })


def twist_chern(inv: SurfaceInvariants, s: SheafChern, k: RationalLike) -> SheafChern:
    """F ⊗ O(kH)"""
    k = as_rational(k)
    r = s.rank
    return SheafChern(
        rank=r,
        c1_sq=s.c1_sq + 2 * r * k * s.c1_dot_H + r * r * k * k * inv.d,
        c1_dot_H=s.c1_dot_H + r * k * inv.d,
        c1_dot_K=s.c1_dot_K + r * k * inv.hk,
        c2=s.c2 + (r - 1) * k * s.c1_dot_H + comb(r, 2) * k * k * inv.d,
    )


def conormal_twist_chern(inv: SurfaceInvariants, k: int) -> SheafChern:
    """N*_X(kH)：c₁ = (2k-5)H - K，c₂ = d² + (-K-5H)·kH + k²d"""
    return twist_chern(inv, dual_chern(normal_bundle_chern(inv)), k)


def ndp_deg_z(m: int, inv: SurfaceInvariants, kd: KoszulDatum) -> int:
    """
    由 c₂(N_X) = d² 与Koszul列
    0 → O(K+(5-m)H+Z₁) → N_X → J_{Z₀}(mH-Z₁) → 0
    解出 deg Z₀ = d² - (K+(5-m)H+Z₁)·(mH-Z₁)

    返回负数表示数值不相容，由调用方判断。
    """
    if m not in (2, 3, 4, 5):
        raise PreconditionError(f"m = {m} 不在 2..5 内")
    if kd.m != m:
        logger.warning(f"KoszulDatum.m = {kd.m} 与 m = {m} 不一致，按 m = {m} 计算")
    t = 5 - m
    product = (m * inv.hk - kd.z1_dot_K
               + t * m * inv.d - t * kd.z1_dot_H
               + m * kd.z1_dot_H - kd.z1_sq)
    return inv.d ** 2 - product


def _filtration_coefficients(case: StabilityBranch):
    if case is StabilityBranch.SEMISTABLE:
        raise PreconditionError("半稳定分支没有Bogomolov滤过")
    return _FILTRATION_COEFFICIENTS[case]


def filtration_classes(fd: FiltrationData, d: RationalLike) -> List[FiltrationRow]:
    """各滤过商的 c₁(L_i) 在 (H, B₁[, B₂]) 基下的系数、L_i·H 与 L_i²"""
    rows = _filtration_coefficients(fd.case)
    d = as_rational(d)
    basis = ("H", "B1", "B2")
    gram = (
        (d, fd.b1_dot_H, fd.b2_dot_H),
        (fd.b1_dot_H, fd.b1_sq, fd.b1_dot_b2),
        (fd.b2_dot_H, fd.b1_dot_b2, fd.b2_sq),
    )

    total = [Fraction(0)] * len(rows[0])
    result = []
    for index, coefficients in enumerate(rows, start=1):
        n = len(coefficients)
        dot_H = sum(coefficients[i] * gram[0][i] for i in range(n))
        square = sum(coefficients[i] * coefficients[j] * gram[i][j]
                     for i in range(n) for j in range(n))
        total = [s + c for s, c in zip(total, coefficients)]
        result.append(FiltrationRow(label=f"L{index}", coefficients=coefficients,
                                    dot_H=dot_H, square=square))

    expected = [Fraction(-1)] + [Fraction(0)] * (len(total) - 1)
    if total != expected:
        raise GeometryError(f"滤过各商的c₁之和 {total} 不等于 -H（基 {basis[:len(total)]}）")
    return result


def filtration_c2_lower_bound(fd: FiltrationData, d: RationalLike) -> Fraction:
    """不稳定分支下 c₂(T_ξ) 的下界"""
    _filtration_coefficients(fd.case)
    d = as_rational(d)
    if fd.case is StabilityBranch.UNSTABLE_RANK2_SUB:
        return (4 * d - fd.b1_sq) / 12
    if fd.case is StabilityBranch.UNSTABLE_RANK1_SUB:
        return (d - fd.b1_sq) / 3
    return (d - fd.b1_sq - fd.b2_sq - fd.b1_dot_b2) / 3


def m4_albanese2_infeasible(d: int) -> bool:
    """四次超曲面、Albanese维数2：deg Z₀ ≤ 4d 与 deg Z₀ ≥ 6d-1 矛盾"""
    if d < 1:
        raise PreconditionError(f"d 必须 ≥ 1，实际 d = {d}")
    return 6 * d - 1 > 4 * d
