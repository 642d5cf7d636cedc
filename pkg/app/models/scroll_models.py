"""
椭圆五次直纹面与Segre (10₄,15₆) 构形的数据模型
"""

from enum import Enum
from typing import Dict, Tuple
from pydantic import Field, model_validator

from .base import ExactModel, RationalValue
from .lattice_models import DivisorClass, Lattice
from .surface_models import HilbertTriple

Point = Tuple[str, str]


class ScrollModel(ExactModel):
    """椭圆五次直纹面：格 {Γ, f} 与极化 H = Γ + 2f"""
    lattice: Lattice
    H: DivisorClass
    h0_conormal3H: int = Field(default=5, description="h⁰(N*(3H))")
    deg_Zs: int = Field(default=10, description="N*(3H)截面零点的次数")
    dim_IX3: int = Field(default=5, description="dim I_X(3)")


class ScrollReport(ExactModel):
    """直纹面数值自检报告"""
    conormal3H_c1: Tuple[RationalValue, ...] = Field(..., description="c₁(N*(3H))在{Γ,f}下的坐标")
    conormal3H_c1_is_H_minus_K: bool
    conormal3H_c1_sq: RationalValue
    conormal3H_c2: RationalValue
    h0_conormal3H: int
    dim_IX3: int
    genus_H: RationalValue
    genus_Gamma: RationalValue
    genus_H_minus_K: RationalValue
    chi_JZ_2H: RationalValue
    ndp_deg_z_cubic: int
    k2: RationalValue
    hilbert_triple: HilbertTriple
    dpf_residual: int


class AppendixDegrees(ExactModel):
    """直纹面构造中各辅助簇的次数"""
    deg_Y0: RationalValue = Field(..., description="割线五次超曲面的次数")
    deg_X_prime: RationalValue = Field(..., description="奇异直纹面 φγ(X) 的次数")
    deg_T_prime: int = Field(..., description="秩3丛F的次数")
    deg_S_prime: int = Field(..., description="有理三次直纹面的次数")
    delta_E_class: Tuple[int, int] = Field(..., description="φ(Δ_E) = aL' + bl 的 (a, b)")
    delta_E_dot_L: int = Field(..., description="L'·φ(Δ_E)")


class PlaneKind(str, Enum):
    A = "A"
    B = "B"


class Plane(ExactModel):
    """构形中的平面：A型以标签e为指标，B型以标签对{e,e'}为指标"""
    kind: PlaneKind
    index: Tuple[str, ...]
    members: Tuple[Point, ...]

    @property
    def name(self) -> str:
        return "·".join(self.index)


class MeetKind(str, Enum):
    POINT = "Point"
    LINE = "Line"


class PlaneMeet(ExactModel):
    shared_points: Tuple[Point, ...]
    meet: MeetKind


class IncidenceStructure(ExactModel):
    """抽象的点-平面关联结构"""
    labels: Tuple[str, ...]
    points: Tuple[Point, ...]
    planes: Tuple[Plane, ...]

    @model_validator(mode="after")
    def _check_configuration(self) -> "IncidenceStructure":
        if len(self.points) != 10:
            raise ValueError(f"点数应为10，实际{len(self.points)}")
        if len(self.planes) != 15:
            raise ValueError(f"平面数应为15，实际{len(self.planes)}")
        degree: Dict[Point, int] = {p: 0 for p in self.points}
        for plane in self.planes:
            if len(plane.members) != 4:
                raise ValueError(f"平面 {plane.name} 含 {len(plane.members)} 个点")
            for p in plane.members:
                if p not in degree:
                    raise ValueError(f"平面 {plane.name} 含未知点 {p}")
                degree[p] += 1
        bad = [p for p, k in degree.items() if k != 6]
        if bad:
            raise ValueError(f"点 {bad} 不在恰好6个平面上")
        return self

    def plane(self, kind: PlaneKind, *index: str) -> Plane:
        key = tuple(sorted(index))
        for plane in self.planes:
            if plane.kind is kind and plane.index == key:
                return plane
        raise KeyError(f"未知平面: {kind.value} {key}")

    def planes_through(self, point: Point) -> Tuple[Plane, ...]:
        return tuple(plane for plane in self.planes if point in plane.members)
