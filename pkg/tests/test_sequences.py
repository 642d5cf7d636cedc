from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.core.exceptions import PreconditionError
from app.models import FiltrationData, KoszulDatum, SheafChern, StabilityBranch, SurfaceInvariants
from app.services.lattice import rr_surface_chi
from app.services.sequences import (
    conormal_twist_chern,
    filtration_c2_lower_bound,
    filtration_classes,
    line_bundle_chern,
    m4_albanese2_infeasible,
    ndp_deg_z,
    normal_bundle_chern,
    pairing,
    twisted_ideal_chern,
    whitney_c,
)

ZERO_LINE = SheafChern(rank=1, c1_sq=0, c1_dot_H=0, c1_dot_K=0, c2=0)


def test_whitney_with_trivial_sub():
    quot = SheafChern(rank=2, c1_sq=7, c1_dot_H=3, c1_dot_K=-1, c2=4)
    total = whitney_c(ZERO_LINE, quot, 0)
    assert total.rank == 3
    assert (total.c1_sq, total.c1_dot_H, total.c1_dot_K, total.c2) == (7, 3, -1, 4)


def test_whitney_reproduces_scroll_normal_bundle(scroll_inv):
    sub = line_bundle_chern(scroll_inv, 2, 1)
    quot = twisted_ideal_chern(scroll_inv, 3, 10)
    total = whitney_c(sub, quot, pairing(scroll_inv, (2, 1), (3, 0)))
    assert total.c2 == 25
    normal = normal_bundle_chern(scroll_inv)
    assert (total.c1_sq, total.c1_dot_H, total.c1_dot_K) == (normal.c1_sq, normal.c1_dot_H, normal.c1_dot_K)


def test_whitney_reproduces_conic_bundle_normal_bundle(adsr_inv):
    sub = line_bundle_chern(adsr_inv, 1, 1)
    quot = twisted_ideal_chern(adsr_inv, 4, 32)
    total = whitney_c(sub, quot, pairing(adsr_inv, (1, 1), (4, 0)))
    assert total.c2 == 64 == adsr_inv.d ** 2


def test_whitney_associative(adsr_inv):
    classes = [(1, 0), (2, -1), (Fraction(1, 3), 1)]
    a, b, c = (line_bundle_chern(adsr_inv, *x) for x in classes)
    ab = whitney_c(a, b, pairing(adsr_inv, classes[0], classes[1]))
    left = whitney_c(ab, c, pairing(adsr_inv, classes[0], classes[2]) + pairing(adsr_inv, classes[1], classes[2]))
    bc = whitney_c(b, c, pairing(adsr_inv, classes[1], classes[2]))
    right = whitney_c(a, bc, pairing(adsr_inv, classes[0], classes[1]) + pairing(adsr_inv, classes[0], classes[2]))
    assert left == right


def test_ndp_deg_z_scroll_on_cubic(scroll_inv):
    assert ndp_deg_z(3, scroll_inv, KoszulDatum(m=3)) == 10
    one_ruling = KoszulDatum(m=3, z1_dot_H=1, z1_dot_K=-2, z1_sq=0)
    assert ndp_deg_z(3, scroll_inv, one_ruling) == 7
    two_rulings = KoszulDatum(m=3, z1_dot_H=2, z1_dot_K=-4, z1_sq=0)
    assert ndp_deg_z(3, scroll_inv, two_rulings) == 4


def test_ndp_deg_z_conic_bundle_on_quartic(adsr_inv):
    assert ndp_deg_z(4, adsr_inv, KoszulDatum(m=4)) == 32


def test_ndp_quartic_congruence_mod_8():
    for d in range(1, 41):
        for hk in range(-60, 61):
            if (d + hk) % 2:
                continue
            inv = SurfaceInvariants(d=d, hk=hk, k2=0, chi=0)
            assert (ndp_deg_z(4, inv, KoszulDatum(m=4)) - d * d) % 8 == 0


def test_ndp_quadric_identity():
    for d in range(1, 41):
        for hk in range(-60, 61, 3):
            inv = SurfaceInvariants(d=d, hk=hk, k2=0, chi=0)
            deg_z = ndp_deg_z(2, inv, KoszulDatum(m=2))
            # d² - 4d - deg Z = 4(g-1)
            assert d * d - 4 * d - deg_z == 2 * (d + hk)


def test_ndp_range(scroll_inv):
    with pytest.raises(PreconditionError):
        ndp_deg_z(6, scroll_inv, KoszulDatum(m=5))


def test_conormal_twist(scroll_inv, adsr_inv):
    twisted = conormal_twist_chern(scroll_inv, 3)
    assert twisted.rank == 2
    assert (twisted.c1_sq, twisted.c2) == (15, 10)
    assert twisted.c1_dot_H == 10
    assert conormal_twist_chern(adsr_inv, 0).c2 == 64
    assert conormal_twist_chern(scroll_inv, 0).c1_dot_H == -20


def test_conormal_twist_matches_ideal_chi(scroll_inv, scroll_lattice):
    H = scroll_lattice.divisor(1, 2)
    assert conormal_twist_chern(scroll_inv, 2).c2 == rr_surface_chi(scroll_lattice, 2 * H) - 10 == 5


@pytest.mark.parametrize("case,rows", [
    (StabilityBranch.UNSTABLE_RANK2_SUB, [(Fraction(-2, 3), Fraction(1, 3)), (Fraction(-1, 3), Fraction(-1, 3))]),
    (StabilityBranch.UNSTABLE_RANK1_SUB, [(Fraction(-1, 3), Fraction(2, 3)), (Fraction(-2, 3), Fraction(-2, 3))]),
    (StabilityBranch.UNSTABLE_FULL_LADDER, [
        (Fraction(-1, 3), Fraction(2, 3), Fraction(1, 3)),
        (Fraction(-1, 3), Fraction(-1, 3), Fraction(1, 3)),
        (Fraction(-1, 3), Fraction(-1, 3), Fraction(-2, 3)),
    ]),
])
def test_filtration_classes(case, rows):
    fd = FiltrationData(case=case, b1_sq=4, b1_dot_H=6, b2_sq=1, b2_dot_H=3, b1_dot_b2=2)
    result = filtration_classes(fd, 9)
    assert [row.coefficients for row in result] == rows
    width = len(rows[0])
    assert [sum(row.coefficients[i] for row in result) for i in range(width)] == [-1] + [0] * (width - 1)
    assert sum(row.dot_H for row in result) == -9


def test_filtration_class_numbers():
    fd = FiltrationData(case=StabilityBranch.UNSTABLE_RANK2_SUB, b1_sq=4, b1_dot_H=6)
    first = filtration_classes(fd, 9)[0]
    # (-2/3 H + 1/3 B₁)
    assert first.dot_H == Fraction(-2, 3) * 9 + Fraction(1, 3) * 6
    assert first.square == Fraction(4, 9) * 9 - Fraction(4, 9) * 6 + Fraction(1, 9) * 4


def test_filtration_c2_lower_bounds():
    d = 12
    rank2 = FiltrationData(case=StabilityBranch.UNSTABLE_RANK2_SUB, b1_sq=4 * d, b1_dot_H=1)
    assert filtration_c2_lower_bound(rank2, d) == 0
    rank1 = FiltrationData(case=StabilityBranch.UNSTABLE_RANK1_SUB, b1_sq=Fraction(d, 4), b1_dot_H=1)
    assert filtration_c2_lower_bound(rank1, d) == Fraction(d, 4)
    ladder = FiltrationData(case=StabilityBranch.UNSTABLE_FULL_LADDER, b1_sq=0, b1_dot_H=1)
    assert filtration_c2_lower_bound(ladder, d) == Fraction(d, 3)


def test_filtration_semistable_rejected():
    fd = FiltrationData(case=StabilityBranch.SEMISTABLE, b1_sq=0, b1_dot_H=1)
    with pytest.raises(PreconditionError):
        filtration_classes(fd, 10)
    with pytest.raises(PreconditionError):
        filtration_c2_lower_bound(fd, 10)


def test_filtration_requires_positive_b1():
    with pytest.raises(ValidationError):
        FiltrationData(case=StabilityBranch.UNSTABLE_RANK1_SUB, b1_sq=1, b1_dot_H=0)


def test_m4_albanese2_infeasible():
    assert m4_albanese2_infeasible(1)
    assert m4_albanese2_infeasible(10)
    with pytest.raises(PreconditionError):
        m4_albanese2_infeasible(0)
