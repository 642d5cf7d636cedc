"""
Néron–Severi 格与除子类的数据模型
"""

from fractions import Fraction
from typing import Tuple, Union
from pydantic import Field, model_validator

from app.core.exceptions import LatticeMismatchError
from .base import ExactModel, RationalValue


class Lattice(ExactModel):
    """整二次型（相交形式）及典范类"""
    basis_labels: Tuple[str, ...] = Field(..., min_length=1, description="基底名称")
    gram: Tuple[Tuple[int, ...], ...] = Field(..., description="对称整数相交矩阵")
    canonical: Tuple[int, ...] = Field(..., description="典范类K的坐标")
    chi_O: int = Field(default=0, description="χ(O_X)")

    @model_validator(mode="after")
    def _check_shape(self) -> "Lattice":
        n = len(self.basis_labels)
        if len(set(self.basis_labels)) != n:
            raise ValueError("基底名称重复")
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError(f"gram必须是{n}x{n}矩阵")
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"gram不对称: ({i},{j})")
        if len(self.canonical) != n:
            raise ValueError("canonical坐标长度与秩不符")
        return self

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def divisor(self, *coords: Union[int, Fraction]) -> "DivisorClass":
        return DivisorClass(lattice=self, coords=tuple(coords))

    def basis_class(self, label: str) -> "DivisorClass":
        if label not in self.basis_labels:
            raise KeyError(f"未知基底: {label}")
        index = self.basis_labels.index(label)
        return self.divisor(*(1 if i == index else 0 for i in range(self.rank)))

    def canonical_class(self) -> "DivisorClass":
        return self.divisor(*self.canonical)

    def zero(self) -> "DivisorClass":
        return self.divisor(*([0] * self.rank))


class DivisorClass(ExactModel):
    """格中的除子类（坐标可为有理数）"""
    lattice: Lattice
    coords: Tuple[RationalValue, ...]

    @model_validator(mode="after")
    def _check_length(self) -> "DivisorClass":
        if len(self.coords) != self.lattice.rank:
            raise ValueError(f"坐标长度{len(self.coords)}与格的秩{self.lattice.rank}不符")
        return self

    def _same_lattice(self, other: "DivisorClass"):
        if self.lattice != other.lattice:
            raise LatticeMismatchError("除子类属于不同的格")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_lattice(other)
        return DivisorClass(lattice=self.lattice,
                            coords=tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_lattice(other)
        return DivisorClass(lattice=self.lattice,
                            coords=tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(lattice=self.lattice, coords=tuple(-a for a in self.coords))

    def __mul__(self, scalar: Union[int, Fraction]) -> "DivisorClass":
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        return DivisorClass(lattice=self.lattice, coords=tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__
