"""
Néron–Severi格的相交理论
相交数、Riemann–Roch、伴随公式、Hodge指标检查
"""

from fractions import Fraction
from typing import Tuple

import sympy
from loguru import logger

from app.core.exceptions import LatticeMismatchError, PreconditionError
from app.models import DivisorClass, Lattice


def intersect(D1: DivisorClass, D2: DivisorClass) -> Fraction:
    """相交数 D1ᵀ · gram · D2"""
    if D1.lattice != D2.lattice:
        raise LatticeMismatchError("相交的两个类属于不同的格")
    gram = D1.lattice.gram
    total = Fraction(0)
    for i, a in enumerate(D1.coords):
        if a == 0:
            continue
        row = gram[i]
        for j, b in enumerate(D2.coords):
            if b:
                total += a * row[j] * b
    return total


def self_intersection(D: DivisorClass) -> Fraction:
    return intersect(D, D)


def hodge_index_ok(H: DivisorClass, D: DivisorClass) -> bool:
    """Hodge指标不等式 (H·D)² ≥ H²·D²"""
    h2 = intersect(H, H)
    if h2 <= 0:
        raise PreconditionError(f"Hodge指标检查要求 H² > 0，实际 H² = {h2}")
    return intersect(H, D) ** 2 >= h2 * intersect(D, D)


def rr_surface_chi(lat: Lattice, D: DivisorClass) -> Fraction:
    """曲面上的Riemann–Roch: χ(O_X(D)) = χ(O_X) + D·(D-K)/2"""
    K = lat.canonical_class()
    return lat.chi_O + intersect(D, D - K) / 2


def adjunction_two_g_minus_2(lat: Lattice, C: DivisorClass) -> Fraction:
    """伴随公式: 2g(C)-2 = C·(C+K)"""
    return intersect(C, C + lat.canonical_class())


def genus(lat: Lattice, C: DivisorClass) -> Fraction:
    return adjunction_two_g_minus_2(lat, C) / 2 + 1


def signature(lat: Lattice) -> Tuple[int, int, int]:
    """
    相交形式的惯性指数 (正, 负, 零)

    对称矩阵的特征多项式只有实根，Descartes符号法则给出精确的正根个数。
    """
    x = sympy.Symbol("x")
    poly = sympy.Matrix(lat.gram).charpoly(x)
    coeffs = [int(c) for c in poly.all_coeffs()]

    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def sign_changes(values):
        signs = [v > 0 for v in values if v != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    degree = len(coeffs) - 1
    positive = sign_changes(coeffs)
    negative = sign_changes([c * (-1) ** (degree - i) for i, c in enumerate(coeffs)])
    return positive, negative, zero


def has_hodge_signature(lat: Lattice) -> bool:
    """gram的符号差是否为 (1, n-1)"""
    positive, negative, zero = signature(lat)
    ok = positive == 1 and negative == lat.rank - 1 and zero == 0
    if not ok:
        logger.debug(f"格 {lat.basis_labels} 的符号差为 ({positive}, {negative}, {zero})")
    return ok


def polarization_lattice(d: int, canonical_multiple: int = 0, chi_O: int = 0) -> Lattice:
    """只含极化的秩1格: gram [[d]]，K = canonical_multiple·H"""
    if d < 1:
        raise PreconditionError(f"极化次数必须为正: {d}")
    return Lattice(basis_labels=("H",), gram=((d,),), canonical=(canonical_multiple,), chi_O=chi_O)


def elliptic_scroll_lattice() -> Lattice:
    """椭圆五次直纹面的格: Γ² = 1, Γ·f = 1, f² = 0, K = -2Γ + f, χ = 0"""
    return Lattice(
        basis_labels=("Γ", "f"),
        gram=((1, 1), (1, 0)),
        canonical=(-2, 1),
        chi_O=0,
    )
