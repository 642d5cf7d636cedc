"""
曲面不变量
Noether公式、双点公式、截面亏格、斜率与完全交族
"""

from fractions import Fraction

from app.core.exceptions import InconsistentInvariantsError, PreconditionError
from app.core.rational import binomial_poly
from app.models import HilbertTriple, SurfaceInvariants


def noether_c2(inv: SurfaceInvariants) -> int:
    """Noether公式: c₂ = 12χ - K²"""
    return 12 * inv.chi - inv.k2


def sectional_genus_two_g_minus_2(inv) -> int:
    """2g(H) - 2 = H² + H·K"""
    return inv.d + inv.hk


def dpf_residual(inv: SurfaceInvariants) -> int:
    """
    双点公式残差 d² - 5d - 10(g-1) + (c₂ - K²)

    P⁴中的光滑曲面残差为0。
    """
    two_g_minus_2 = sectional_genus_two_g_minus_2(inv)
    return inv.d ** 2 - 5 * inv.d - 5 * two_g_minus_2 + noether_c2(inv) - inv.k2


def slope(inv: SurfaceInvariants) -> Fraction:
    """斜率 α = K²/χ"""
    if inv.chi <= 0:
        raise PreconditionError(f"斜率要求 χ > 0，实际 χ = {inv.chi}")
    return Fraction(inv.k2, inv.chi)


def geometric_genus(inv: SurfaceInvariants) -> int:
    """p_g = χ - 1 + q"""
    if inv.q is None:
        raise PreconditionError("计算p_g需要不规则数q")
    return inv.chi - 1 + inv.q


def _chi_projective_space(t: int) -> Fraction:
    # χ(O_{P⁴}(t)) = C(t+4, 4)
    return binomial_poly(t + 4, 4)


def ci_chi_koszul(a: int) -> int:
    """四次与a次超曲面完全交的χ(O_X)，由Koszul分解得到"""
    chi = (_chi_projective_space(0) - _chi_projective_space(-4)
           - _chi_projective_space(-a) + _chi_projective_space(-4 - a))
    return int(chi)


def ci_chi_closed_form(a: int) -> Fraction:
    return Fraction(2 * a ** 3 - 3 * a ** 2 + 7 * a, 3)


def ci_pg_binomial(a: int) -> Fraction:
    """C(a+3,4) - C(a-1,4)，等于p_g而不是χ"""
    return binomial_poly(a + 3, 4) - binomial_poly(a - 1, 4)


def ci_invariants(a: int) -> SurfaceInvariants:
    """完全交 (4, a) 的不变量：K = (a-1)H"""
    if a < 2:
        raise PreconditionError(f"完全交 (4, a) 要求 a ≥ 2，实际 a = {a}")
    inv = SurfaceInvariants(
        d=4 * a,
        hk=4 * a * (a - 1),
        k2=4 * a * (a - 1) ** 2,
        chi=ci_chi_koszul(a),
        q=0,
    )
    residual = dpf_residual(inv)
    if residual != 0:
        raise InconsistentInvariantsError(f"完全交 (4, {a}) 的双点公式残差为 {residual}")
    return inv


def hilbert_triple(inv: SurfaceInvariants) -> HilbertTriple:
    return HilbertTriple(d=inv.d, hk=inv.hk, chi=inv.chi)


def complete_triple(triple: HilbertTriple, k2: int) -> SurfaceInvariants:
    """用K²补全Hilbert三元组"""
    return SurfaceInvariants(d=triple.d, hk=triple.hk, k2=k2, chi=triple.chi)
