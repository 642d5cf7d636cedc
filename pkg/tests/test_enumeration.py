from fractions import Fraction

import pytest

from app.core.exceptions import InvalidQueryError, PreconditionError
from app.models import DegZBranch, HilbertTriple, SheafChern, SurfaceInvariants
from app.services.bounds import bogomolov_discriminant
from app.services.enumeration import (
    FamilyEnumerator,
    admissible_quartic_deg_z,
    conic_bundle_candidates,
    enumerate_families,
    enumerate_irrational_scrolls,
    enumerate_quartic_conic_bundles,
    irrational_scroll_candidates,
    m5_trivial_class_search,
    make_family_query,
    plane_bundle_degrees,
    quadric_scroll_contradiction,
)
from app.services.invariants import complete_triple, dpf_residual


def test_families_quartic_slope_four():
    query = make_family_query(4, 4)
    triples = enumerate_families(query)
    assert HilbertTriple(d=16, hk=48, chi=36) in triples
    assert all(t.d <= 118 for t in triples)
    assert triples == sorted(triples, key=lambda t: (t.d, t.chi))
    for t in triples:
        assert dpf_residual(complete_triple(t, 4 * t.chi)) == 0


def test_families_quartic_slope_five_degree_cap():
    triples = enumerate_families(make_family_query(4, 5))
    assert triples
    assert max(t.d for t in triples) <= 125


def test_families_quintic_exception_window():
    alpha = Fraction(13, 2)
    triples = enumerate_families(make_family_query(5, alpha))
    assert all(t.chi <= 24 and t.d <= 37 for t in triples)
    for t in triples:
        assert t.chi % 2 == 0
        assert dpf_residual(complete_triple(t, int(alpha * t.chi))) == 0


def test_families_filters():
    base = enumerate_families(make_family_query(4, 4))
    hodge = enumerate_families(make_family_query(4, 4, use_hodge=True))
    positive = enumerate_families(make_family_query(4, 4, require_hk_positive=True))
    assert set(hodge) <= set(base)
    assert set(positive) <= set(base)
    assert all(t.hk * t.hk >= t.d * 4 * t.chi for t in hodge)
    assert all(t.hk >= 1 for t in positive)
    assert HilbertTriple(d=16, hk=48, chi=36) in hodge


def test_families_thread_count_is_unobservable():
    query = make_family_query(5, Fraction(13, 2))
    assert FamilyEnumerator(max_workers=4).enumerate(query) == FamilyEnumerator(max_workers=1).enumerate(query)


@pytest.mark.parametrize("m,alpha", [(4, 6), (4, 7), (5, 6), (1, 3), (6, 1)])
def test_invalid_family_query(m, alpha):
    with pytest.raises(InvalidQueryError):
        make_family_query(m, alpha)


def test_families_without_degree_cap():
    with pytest.raises(InvalidQueryError):
        enumerate_families(make_family_query(3, 2))


def test_irrational_scrolls():
    assert enumerate_irrational_scrolls(100) == [(5, 1)]
    assert enumerate_irrational_scrolls(4) == []
    with pytest.raises(PreconditionError):
        enumerate_irrational_scrolls(2)


def test_irrational_scroll_chain_rejects_d11():
    candidates = {c.d: c for c in irrational_scroll_candidates(20)}
    assert candidates[11].q == 12
    assert candidates[11].a == 5
    assert not candidates[11].accepted
    assert 3 not in candidates
    assert candidates[5].accepted


def test_conic_bundles_unique_solution():
    solutions = enumerate_quartic_conic_bundles()
    assert len(solutions) == 1
    sol = solutions[0]
    assert (sol.d, sol.q, sol.delta, sol.d_prime, sol.k2, sol.hk, sol.c2, sol.deg_z) == (8, 1, 8, 4, -8, 0, 8, 32)
    assert sol.delta == 3 * sol.d - 4 * sol.d_prime
    assert sol.deg_z == sol.d + 6 * sol.d_prime
    assert sol.d ** 2 - 9 * sol.d + 2 * sol.d_prime == 16 * (sol.q - 1)
    inv = SurfaceInvariants(d=sol.d, hk=sol.hk, k2=sol.k2, chi=1 - sol.q, q=sol.q)
    assert dpf_residual(inv) == 0
    assert sol.deg_z <= 45


def test_conic_bundle_rejections():
    candidates = conic_bundle_candidates()
    by_key = {(c.d, c.d_prime): c for c in candidates}
    rejected = by_key[(12, 6)]
    assert rejected.q == 4
    assert rejected.deg_z == 48
    assert rejected.rejected_by == "deg_z"
    assert [c for c in candidates if c.accepted] == [by_key[(8, 4)]]


def test_plane_bundle_degrees():
    bundle = plane_bundle_degrees(enumerate_quartic_conic_bundles()[0])
    assert bundle.rank == 3
    assert bundle.deg_u == 4
    assert bundle.summand_degrees == (0, 2, 2)
    assert bundle.cone_degree == 4


@pytest.mark.parametrize("d,expected", [
    (8, [(24, DegZBranch.UNSTABLE), (32, DegZBranch.STABLE), (40, DegZBranch.STABLE)]),
    (9, [(33, DegZBranch.UNSTABLE), (41, DegZBranch.STABLE)]),
    (10, [(36, DegZBranch.UNSTABLE), (44, DegZBranch.STABLE)]),
    (11, [(33, DegZBranch.UNSTABLE), (41, DegZBranch.UNSTABLE)]),
])
def test_admissible_quartic_deg_z(d, expected):
    assert [(e.deg_z, e.branch) for e in admissible_quartic_deg_z(d)] == expected


def test_admissible_branches_follow_discriminant():
    for d in range(5, 12):
        for entry in admissible_quartic_deg_z(d):
            bundle = SheafChern(rank=2, c1_sq=16 * d, c1_dot_H=4 * d, c1_dot_K=0, c2=entry.deg_z)
            delta = bogomolov_discriminant(bundle)
            assert entry.discriminant == delta
            assert (entry.branch is DegZBranch.STABLE) == (delta >= 0)
            assert entry.deg_z >= 3 * d
            assert (entry.deg_z - d * d) % 8 == 0


def test_admissible_quartic_range():
    with pytest.raises(PreconditionError):
        admissible_quartic_deg_z(12)
    with pytest.raises(PreconditionError):
        admissible_quartic_deg_z(4)


def test_m5_trivial_class_search_is_empty():
    assert m5_trivial_class_search() == []


def test_m5_relaxed_hk_readmits_degree_16():
    survivors = m5_trivial_class_search(relax_hk_below_d=True)
    assert SurfaceInvariants(d=16, hk=18, k2=9, chi=1) in survivors


def test_m5_relaxed_bmy_adds_nothing_small():
    relaxed = [s for s in m5_trivial_class_search(relax_bmy=True) if s.chi == 1 and s.d <= 13]
    assert relaxed == []


@pytest.mark.parametrize("d", [4, 8, 12, 40])
def test_quadric_scroll_contradiction(d):
    assert quadric_scroll_contradiction(d) == (d, d)


def test_quadric_scroll_requires_multiple_of_four():
    with pytest.raises(PreconditionError):
        quadric_scroll_contradiction(6)
    with pytest.raises(PreconditionError):
        quadric_scroll_contradiction(0)
