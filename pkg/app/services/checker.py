"""
曲面不变量记录的一致性检查

identity 类对 P⁴ 中任意光滑曲面成立；filter 类是曲面落在 m 次超曲面上
的必要条件，不通过只说明该记录不在对应的超曲面上。
"""

from typing import List, Optional

from loguru import logger

from app.core.rational import RationalLike, as_rational, format_rational
from app.models import CheckKind, CheckLine, CheckReport, StabilityBranch, SurfaceInvariants
from app.services.bounds import (
    bmy_ok,
    bogomolov_discriminant,
    ep_genus_bound,
    general_type_c2_minus_k2_lower_bound,
    thm44_bound_check,
    txi_chern,
)
from app.services.invariants import dpf_residual, noether_c2, sectional_genus_two_g_minus_2, slope

HYPERSURFACE_DEGREES = (2, 3, 4, 5)
GENERAL_TYPE_DEGREES = (2, 3, 4)
EP_GENUS_DEGREES = (4, 5)


def _identity_lines(inv: SurfaceInvariants, residual: int) -> List[CheckLine]:
    two_g_minus_2 = sectional_genus_two_g_minus_2(inv)
    hodge_gap = inv.hk ** 2 - inv.d * inv.k2
    return [
        CheckLine(name="dpf", passed=residual == 0, detail=f"residual={residual}"),
        CheckLine(name="sectional_genus", passed=two_g_minus_2 % 2 == 0, detail=f"2g-2={two_g_minus_2}"),
        CheckLine(name="bmy", passed=bmy_ok(inv), detail=f"k2={inv.k2}, 9chi={9 * inv.chi}"),
        CheckLine(name="hodge_index", passed=hodge_gap >= 0, detail=f"hk^2-d*k2={hodge_gap}"),
    ]


def _slope_line(inv: SurfaceInvariants) -> CheckLine:
    detail = f"alpha={format_rational(slope(inv))}" if inv.chi > 0 else "chi<=0"
    return CheckLine(name="slope", kind=CheckKind.INFO, passed=None, detail=detail)


def _c2_minus_k2_line(m: int, inv: SurfaceInvariants, excess: int) -> CheckLine:
    name = f"c2_minus_k2_m{m}"
    # K² > 0 且 H·K > 0 是极小一般型曲面的必要条件，其余记录不适用
    if inv.k2 <= 0 or inv.hk <= 0:
        return CheckLine(name=name, kind=CheckKind.INFO, passed=None, detail="not general type")
    semistable = general_type_c2_minus_k2_lower_bound(m, inv, StabilityBranch.SEMISTABLE)
    unstable = general_type_c2_minus_k2_lower_bound(m, inv, StabilityBranch.UNSTABLE_FULL_LADDER)
    bound = min(semistable, unstable)
    return CheckLine(name=name, kind=CheckKind.FILTER, passed=excess >= bound,
                     detail=f"c2-k2={excess}, bound={format_rational(bound)}")


def _hypersurface_lines(inv: SurfaceInvariants) -> List[CheckLine]:
    lines: List[CheckLine] = []
    two_g_minus_2 = sectional_genus_two_g_minus_2(inv)
    excess = noether_c2(inv) - inv.k2

    for m in HYPERSURFACE_DEGREES:
        if m in EP_GENUS_DEGREES:
            bound = ep_genus_bound(m, inv.d)
            lines.append(CheckLine(name=f"ep_genus_m{m}", kind=CheckKind.FILTER, passed=two_g_minus_2 <= bound,
                                   detail=f"2g-2={two_g_minus_2}, bound={format_rational(bound)}"))
        delta = bogomolov_discriminant(txi_chern(m, inv))
        lines.append(CheckLine(name=f"txi_semistable_m{m}", kind=CheckKind.FILTER, passed=delta >= 0,
                               detail=f"Delta={format_rational(delta)}"))
        if m in GENERAL_TYPE_DEGREES:
            lines.append(_c2_minus_k2_line(m, inv, excess))
    return lines


def _l_sq_line(inv: SurfaceInvariants, l_sq: RationalLike) -> CheckLine:
    l_sq = as_rational(l_sq)
    return CheckLine(name="irregular_l_sq_bound", kind=CheckKind.FILTER, passed=thm44_bound_check(inv, l_sq),
                     detail=f"k2-c2={inv.k2 - noether_c2(inv)}, L^2={format_rational(l_sq)}, d={inv.d}")


def check_surface(inv: SurfaceInvariants, l_sq: Optional[RationalLike] = None) -> CheckReport:
    """
    逐条检查记录

    l_sq 为 Albanese 像上取的除子 L 的自交数，给出时追加 K² - c₂ 与 L² 的界。
    """
    residual = dpf_residual(inv)
    lines = _identity_lines(inv, residual)
    lines.append(_slope_line(inv))
    lines.extend(_hypersurface_lines(inv))
    if l_sq is not None:
        lines.append(_l_sq_line(inv, l_sq))

    report = CheckReport(lines=tuple(lines), dpf_holds=residual == 0)
    logger.debug(f"检查 {inv.model_dump()}: c2={noether_c2(inv)}, dpf={'通过' if report.dpf_holds else '失败'}")
    return report
