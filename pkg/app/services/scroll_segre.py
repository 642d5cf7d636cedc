"""
椭圆五次直纹面与Segre三次超曲面的关联构形

直纹面作为具体的格 {Γ, f} 给出，用于交叉验证序列演算；
(10₄, 15₆) 构形只在抽象的5元标签集上建模，不涉及P⁴中的坐标。
"""

import json
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from loguru import logger

from app.core.exceptions import PreconditionError
from app.models import (
    AppendixDegrees,
    DivisorClass,
    IncidenceStructure,
    KoszulDatum,
    Lattice,
    MeetKind,
    Plane,
    PlaneKind,
    PlaneMeet,
    ScrollModel,
    ScrollReport,
    SurfaceInvariants,
)
from app.services.invariants import dpf_residual, hilbert_triple
from app.services.lattice import (
    elliptic_scroll_lattice,
    genus,
    intersect,
    rr_surface_chi,
    self_intersection,
)
from app.services.sequences import conormal_twist_chern, ndp_deg_z

# 椭圆曲线上秩3丛 F 的次数
DEG_RANK3_BUNDLE = 5
# φ(Δ_E) 中 L' 的系数
DELTA_E_DIRECTRIX_COEFF = 2

DEFAULT_LABELS = ("1", "2", "3", "4", "5")


def scroll_model() -> ScrollModel:
    lattice = elliptic_scroll_lattice()
    return ScrollModel(lattice=lattice, H=lattice.divisor(1, 2))


def scroll_named_class(name: str) -> DivisorClass:
    """按名称取直纹面上的类：H, K, Γ, f, H-K, H+5f, 2H"""
    model = scroll_model()
    lattice, H = model.lattice, model.H
    K = lattice.canonical_class()
    gamma = lattice.basis_class("Γ")
    f = lattice.basis_class("f")
    classes: Dict[str, DivisorClass] = {
        "H": H,
        "K": K,
        "Γ": gamma,
        "Gamma": gamma,
        "f": f,
        "H−K": H - K,
        "H-K": H - K,
        "H+5f": H + 5 * f,
        "2H": 2 * H,
    }
    if name not in classes:
        raise PreconditionError(f"未知的类名: {name}，可选 {sorted(classes)}")
    return classes[name]


def scroll_invariants() -> SurfaceInvariants:
    """由格直接读出的 (d, H·K, K², χ)"""
    model = scroll_model()
    K = model.lattice.canonical_class()
    return SurfaceInvariants(
        d=int(self_intersection(model.H)),
        hk=int(intersect(model.H, K)),
        k2=int(self_intersection(K)),
        chi=model.lattice.chi_O,
        q=1,
    )


def scroll_sanity_report() -> ScrollReport:
    model = scroll_model()
    lattice, H = model.lattice, model.H
    K = lattice.canonical_class()
    inv = scroll_invariants()

    conormal = conormal_twist_chern(inv, 3)
    H_minus_K = H - K
    # c₁(N*(3H)) = 2·3H - (K + 5H)
    c1 = 6 * H - (K + 5 * H)
    c1_matches = (conormal.c1_sq == self_intersection(c1)
                  and conormal.c1_dot_H == intersect(c1, H)
                  and conormal.c1_dot_K == intersect(c1, K))
    if not c1_matches:
        logger.error("c₁(N*(3H)) 的序列演算与格计算不一致")

    report = ScrollReport(
        conormal3H_c1=c1.coords,
        conormal3H_c1_is_H_minus_K=c1_matches and c1 == H_minus_K,
        conormal3H_c1_sq=conormal.c1_sq,
        conormal3H_c2=conormal.c2,
        h0_conormal3H=model.h0_conormal3H,
        dim_IX3=model.dim_IX3,
        genus_H=genus(lattice, H),
        genus_Gamma=genus(lattice, lattice.basis_class("Γ")),
        genus_H_minus_K=genus(lattice, H_minus_K),
        chi_JZ_2H=rr_surface_chi(lattice, 2 * H) - model.deg_Zs,
        ndp_deg_z_cubic=ndp_deg_z(3, inv, KoszulDatum(m=3)),
        k2=self_intersection(K),
        hilbert_triple=hilbert_triple(inv),
        dpf_residual=dpf_residual(inv),
    )
    logger.debug(f"直纹面自检: c₂(N*(3H)) = {report.conormal3H_c2}, deg Z = {report.ndp_deg_z_cubic}")
    return report


def cubic_scroll_lattice() -> Lattice:
    """有理三次直纹面 S'_e = F₁：准线 L'（L'² = -1）与纤维 l"""
    return Lattice(
        basis_labels=("L'", "l"),
        gram=((-1, 1), (1, 0)),
        canonical=(-2, -3),
        chi_O=1,
    )


def appendix_degrees() -> AppendixDegrees:
    inv = scroll_invariants()
    deg_Y0 = self_intersection(scroll_named_class("H-K")) - conormal_twist_chern(inv, 3).c2
    deg_X_prime = self_intersection(scroll_named_class("H+5f"))

    cubic = cubic_scroll_lattice()
    directrix, fibre = cubic.basis_class("L'"), cubic.basis_class("l")
    H_cubic = directrix + 2 * fibre

    # H·(a L' + b l) = deg F，解出 b
    a = DELTA_E_DIRECTRIX_COEFF
    b = (DEG_RANK3_BUNDLE - a * intersect(H_cubic, directrix)) / intersect(H_cubic, fibre)
    delta_E = a * directrix + b * fibre
    return AppendixDegrees(
        deg_Y0=deg_Y0,
        deg_X_prime=deg_X_prime,
        deg_T_prime=DEG_RANK3_BUNDLE,
        deg_S_prime=int(self_intersection(H_cubic)),
        delta_E_class=(a, int(b)),
        delta_E_dot_L=int(intersect(directrix, delta_E)),
    )


def _pairs(labels: Iterable[str]) -> List[Tuple[str, str]]:
    return [tuple(pair) for pair in combinations(sorted(labels), 2)]


def segre_configuration(labels: Iterable[str] = DEFAULT_LABELS) -> IncidenceStructure:
    """
    (10₄, 15₆) 构形：点为标签的2元子集；
    A型平面 Π_e 含所有过 e 的对，
    B型平面 Π_{e·e'} 含 {e, e'} 及补集三元组中的三个对
    """
    labels = tuple(labels)
    if len(labels) != 5 or len(set(labels)) != 5:
        raise PreconditionError(f"需要恰好5个不同的标签，实际 {labels}")
    labels = tuple(sorted(labels))
    points = _pairs(labels)

    planes = []
    for e in labels:
        members = tuple(p for p in points if e in p)
        planes.append(Plane(kind=PlaneKind.A, index=(e,), members=members))
    for pair in points:
        complement = [x for x in labels if x not in pair]
        members = tuple(sorted([pair] + _pairs(complement)))
        planes.append(Plane(kind=PlaneKind.B, index=pair, members=members))

    cfg = IncidenceStructure(labels=labels, points=tuple(points), planes=tuple(planes))
    logger.debug(f"Segre构形: 标签 {labels}, {len(cfg.points)} 点, {len(cfg.planes)} 平面")
    return cfg


def plane_meet(cfg: IncidenceStructure, P: Plane, Q: Plane) -> PlaneMeet:
    if P == Q:
        raise PreconditionError(f"平面 {P.name} 与自身求交")
    shared = tuple(p for p in P.members if p in Q.members)
    if not shared:
        raise PreconditionError(f"平面 {P.name} 与 {Q.name} 没有公共点")
    meet = MeetKind.LINE if len(shared) >= 2 else MeetKind.POINT
    return PlaneMeet(shared_points=shared, meet=meet)


def lines_through_point(cfg: IncidenceStructure, p: Tuple[str, str]) -> Tuple[Tuple[Plane, ...], Tuple[Plane, ...]]:
    """
    过点 e·e' 的6个平面分成两组：
    {Π_e, Π_e', Π_{e·e'}} 与补集三元组上的三个B型平面。
    组内两两只交于该点，跨组的平面交于直线。
    """
    point = tuple(sorted(p))
    if point not in cfg.points:
        raise PreconditionError(f"未知点: {p}")
    e, e_prime = point
    first = (
        cfg.plane(PlaneKind.A, e),
        cfg.plane(PlaneKind.A, e_prime),
        cfg.plane(PlaneKind.B, e, e_prime),
    )
    second = tuple(plane for plane in cfg.planes_through(point) if plane not in first)
    return first, second


def incidence_to_json(cfg: IncidenceStructure) -> str:
    payload = {
        "points": [list(p) for p in cfg.points],
        "planes": [
            {"kind": plane.kind.value, "index": plane.name, "members": [list(m) for m in plane.members]}
            for plane in cfg.planes
        ],
    }
    return json.dumps(payload, ensure_ascii=False)
