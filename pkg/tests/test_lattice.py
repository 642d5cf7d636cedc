from fractions import Fraction
from itertools import product

import pytest
from pydantic import ValidationError

from app.core.exceptions import LatticeMismatchError, PreconditionError
from app.models import Lattice
from app.services.lattice import (
    adjunction_two_g_minus_2,
    elliptic_scroll_lattice,
    genus,
    has_hodge_signature,
    hodge_index_ok,
    intersect,
    polarization_lattice,
    rr_surface_chi,
    self_intersection,
    signature,
)


def test_scroll_intersections(scroll_lattice):
    H = scroll_lattice.divisor(1, 2)
    K = scroll_lattice.canonical_class()
    f = scroll_lattice.basis_class("f")
    assert self_intersection(H) == 5
    assert intersect(H, K) == -5
    assert self_intersection(K) == 0
    assert intersect(H, f) == 1
    assert self_intersection(H - K) == 15


def test_rational_coordinates(scroll_lattice):
    half_H = scroll_lattice.divisor(Fraction(1, 2), 1)
    assert self_intersection(half_H) == Fraction(5, 4)


def test_riemann_roch_and_genus(scroll_lattice):
    H = scroll_lattice.divisor(1, 2)
    assert rr_surface_chi(scroll_lattice, H) == 5
    assert rr_surface_chi(scroll_lattice, 2 * H) == 15
    assert rr_surface_chi(scroll_lattice, scroll_lattice.zero()) == 0
    assert adjunction_two_g_minus_2(scroll_lattice, H) == 0
    assert genus(scroll_lattice, H) == 1
    assert genus(scroll_lattice, scroll_lattice.basis_class("Γ")) == 1
    assert genus(scroll_lattice, H - scroll_lattice.canonical_class()) == 6


def test_genus_of_ruling_is_zero(scroll_lattice):
    f = scroll_lattice.basis_class("f")
    assert adjunction_two_g_minus_2(scroll_lattice, f) == -2
    assert genus(scroll_lattice, f) == 0


def test_hodge_index():
    lat = Lattice(basis_labels=("H", "B"), gram=((12, 10), (10, 9)), canonical=(0, 0))
    H, B = lat.basis_class("H"), lat.basis_class("B")
    # (H·B)² = 100 < H²·B² = 108
    assert not hodge_index_ok(H, B)
    assert hodge_index_ok(H, H)


def test_hodge_index_requires_ample_h(scroll_lattice):
    f = scroll_lattice.basis_class("f")
    with pytest.raises(PreconditionError):
        hodge_index_ok(f, f)


@pytest.mark.parametrize("gram,expected", [
    (((1, 1), (1, 0)), (1, 1, 0)),
    (((5,),), (1, 0, 0)),
    (((1, 0), (0, 0)), (1, 0, 1)),
    (((1, 0, 0), (0, -1, 0), (0, 0, -1)), (1, 2, 0)),
    (((12, 10), (10, 9)), (2, 0, 0)),
])
def test_signature(gram, expected):
    n = len(gram)
    lat = Lattice(basis_labels=tuple(f"e{i}" for i in range(n)), gram=gram, canonical=(0,) * n)
    assert signature(lat) == expected


def test_hodge_signature(scroll_lattice):
    assert has_hodge_signature(scroll_lattice)
    assert has_hodge_signature(polarization_lattice(8))
    definite = Lattice(basis_labels=("a", "b"), gram=((12, 10), (10, 9)), canonical=(0, 0))
    assert not has_hodge_signature(definite)


def test_polarization_lattice():
    lat = polarization_lattice(16, canonical_multiple=3, chi_O=36)
    H = lat.basis_class("H")
    assert intersect(H, lat.canonical_class()) == 48
    assert rr_surface_chi(lat, H) == 36 + Fraction(16 - 48, 2)
    with pytest.raises(PreconditionError):
        polarization_lattice(0)


def test_lattice_mismatch(scroll_lattice):
    other = polarization_lattice(5)
    with pytest.raises(LatticeMismatchError):
        intersect(scroll_lattice.basis_class("f"), other.basis_class("H"))
    with pytest.raises(LatticeMismatchError):
        scroll_lattice.basis_class("f") + other.basis_class("H")


@pytest.mark.parametrize("kwargs", [
    dict(basis_labels=("a", "b"), gram=((1, 2), (0, 1)), canonical=(0, 0)),
    dict(basis_labels=("a", "a"), gram=((1, 0), (0, 1)), canonical=(0, 0)),
    dict(basis_labels=("a",), gram=((1, 0),), canonical=(0,)),
    dict(basis_labels=("a",), gram=((1,),), canonical=(0, 1)),
])
def test_lattice_validation(kwargs):
    with pytest.raises(ValidationError):
        Lattice(**kwargs)


def test_divisor_length_checked(scroll_lattice):
    with pytest.raises(ValidationError):
        scroll_lattice.divisor(1, 2, 3)


def _hyperbolic_lattice():
    return Lattice(basis_labels=("a", "b", "c"), gram=((2, 1, 0), (1, -2, 1), (0, 1, -3)), canonical=(0, 1, -1))


def _box(lat, radius):
    return [lat.divisor(*coords) for coords in product(range(-radius, radius + 1), repeat=lat.rank)]


@pytest.mark.parametrize("make_lattice, radius", [
    (elliptic_scroll_lattice, 2),
    (_hyperbolic_lattice, 1),
])
def test_intersect_symmetric_and_bilinear(make_lattice, radius):
    lat = make_lattice()
    box = _box(lat, radius)
    for D1, D2 in product(box, repeat=2):
        assert intersect(D1, D2) == intersect(D2, D1)
    for D1, D2, E in product(box, repeat=3):
        combined = 2 * D1 - 3 * D2
        assert intersect(combined, E) == 2 * intersect(D1, E) - 3 * intersect(D2, E)
        assert intersect(E, D1 + D2) == intersect(E, D1) + intersect(E, D2)


def test_zero_class_pairs_to_zero(scroll_lattice):
    for D in _box(scroll_lattice, 3):
        assert intersect(D, scroll_lattice.zero()) == 0


@pytest.mark.parametrize("lat", [
    elliptic_scroll_lattice(),
    _hyperbolic_lattice(),
    polarization_lattice(8, canonical_multiple=0, chi_O=0),
    polarization_lattice(16, canonical_multiple=3, chi_O=36),
])
def test_rr_serre_symmetry(lat):
    K = lat.canonical_class()
    for D in _box(lat, 6 if lat.rank < 3 else 2):
        assert rr_surface_chi(lat, D) == rr_surface_chi(lat, K - D)


def test_hodge_index_exhaustive_on_scroll(scroll_lattice):
    box = _box(scroll_lattice, 5)
    ample = [H for H in box if self_intersection(H) > 0]
    assert scroll_lattice.divisor(1, 2) in ample
    for H in ample:
        for D in box:
            assert hodge_index_ok(H, D)


@pytest.mark.parametrize("d", [1, 5, 8, 16])
def test_hodge_index_exhaustive_on_polarization(d):
    lat = polarization_lattice(d)
    H = lat.basis_class("H")
    for a in range(-20, 21):
        D = lat.divisor(Fraction(a, 3))
        assert hodge_index_ok(H, D)
        assert intersect(H, D) ** 2 == self_intersection(H) * self_intersection(D)
