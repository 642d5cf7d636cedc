"""
共享夹具：常用曲面的不变量
"""

import pytest

from app.models import SurfaceInvariants
from app.services.lattice import elliptic_scroll_lattice


@pytest.fixture
def scroll_inv():
    # 椭圆五次直纹面
    return SurfaceInvariants(d=5, hk=-5, k2=0, chi=0, q=1)


@pytest.fixture
def adsr_inv():
    # 次数8的椭圆二次曲线丛
    return SurfaceInvariants(d=8, hk=0, k2=-8, chi=0, q=1)


@pytest.fixture
def abelian_inv():
    return SurfaceInvariants(d=10, hk=0, k2=0, chi=0, q=2)


@pytest.fixture
def scroll_lattice():
    return elliptic_scroll_lattice()
