"""
有限性枚举引擎
按 (m, α) 枚举Hilbert三元组、无理直纹面分类、四次二次曲线丛求解、
允许的 deg Z 表、五次情形的穷举排除与二次超曲面奇异直纹面矛盾
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import InvalidQueryError, PreconditionError
from app.core.rational import RationalLike, as_rational, floor_rational
from app.models import (
    ConicBundleCandidate,
    ConicBundleSolution,
    DegZBranch,
    DegZEntry,
    FamilyFilters,
    FamilyQuery,
    HilbertTriple,
    PlaneBundleDegrees,
    ScrollCandidate,
    SurfaceInvariants,
)
from app.services.bounds import (
    chi_lower_bound_applies,
    chi_upper_bound,
    d_alpha,
    ep_genus_bound,
    pm_polynomial,
    quartic_bundle_discriminant,
    varchenko_bound,
)
from app.services.curves import castelnuovo_max_genus

# 二次曲线丛求解的扫描窗口
CONIC_D_PRIME_RANGE = range(3, 7)
CONIC_D_RANGE = range(5, 46)
CONIC_BASE_EMBEDDING = 3

# 五次情形穷举的扫描窗口
M5_D_RANGE = range(5, 17)
M5_CHI_VALUES = (1, 2)
M5_K2_CAP = 14

FAMILY_D_START = 5


def make_family_query(m: int, alpha: RationalLike, use_hodge: bool = False,
                      require_hk_positive: bool = False) -> FamilyQuery:
    """构造查询，把校验失败统一为 InvalidQueryError"""
    try:
        return FamilyQuery(
            m=m,
            alpha=alpha,
            extra_filters=FamilyFilters(use_hodge=use_hodge, require_hk_positive=require_hk_positive),
        )
    except ValidationError as e:
        logger.warning(f"无效查询 m={m}, α={alpha}: {e.errors()[0]['msg']}")
        raise InvalidQueryError(f"无效查询 m={m}, α={alpha}: {e.errors()[0]['msg']}") from e


class FamilyEnumerator:
    """按次数划分区间并行枚举曲面族"""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers

    def _worker_count(self) -> int:
        workers = self.max_workers if self.max_workers is not None else settings.P4GEO_THREADS
        return max(1, workers or 1)

    def _scan_degree(self, query: FamilyQuery, d: int) -> List[HilbertTriple]:
        m, alpha = query.m, query.alpha
        filters = query.extra_filters
        chi_max = floor_rational(chi_upper_bound(m, alpha, d))
        genus_cap = ep_genus_bound(m, d)
        chi_min = 1
        if chi_lower_bound_applies(m, d):
            chi_min = max(chi_min, -floor_rational(-pm_polynomial(m, d)))

        # K² = αχ 为整数当且仅当 χ 是α分母的倍数
        step = alpha.denominator
        start = ((chi_min + step - 1) // step) * step
        survivors = []
        for chi in range(start, chi_max + 1, step):
            k2 = alpha.numerator * (chi // step)
            numerator = d * d - 10 * d + 12 * chi - 2 * k2
            if numerator % 5:
                continue
            hk = numerator // 5
            if (d + hk) % 2 or d + hk > genus_cap:
                continue
            if filters.use_hodge and hk * hk < d * k2:
                continue
            if filters.require_hk_positive and hk < 1:
                continue
            survivors.append(HilbertTriple(d=d, hk=hk, chi=chi))
        logger.debug(f"m={m}, α={alpha}, d={d}: χ ∈ [{chi_min}, {chi_max}]，保留 {len(survivors)} 个")
        return survivors

    def _scan_degrees(self, query: FamilyQuery, degrees: Sequence[int]) -> List[HilbertTriple]:
        found = []
        for d in degrees:
            found.extend(self._scan_degree(query, d))
        return found

    def enumerate(self, query: FamilyQuery) -> List[HilbertTriple]:
        if query.m not in (4, 5):
            raise InvalidQueryError(f"m = {query.m} 没有次数上界 d(α)，只支持 m ∈ {{4, 5}}")
        try:
            d_max = d_alpha(query.m, query.alpha)
        except PreconditionError as e:
            raise InvalidQueryError(str(e)) from e

        degrees = list(range(FAMILY_D_START, d_max + 1))
        workers = min(self._worker_count(), max(1, len(degrees)))
        if workers == 1:
            triples = self._scan_degrees(query, degrees)
        else:
            chunks = [degrees[i::workers] for i in range(workers)]
            with ThreadPoolExecutor(max_workers=workers) as executor:
                parts = executor.map(lambda chunk: self._scan_degrees(query, chunk), chunks)
                triples = [t for part in parts for t in part]

        triples.sort(key=lambda t: (t.d, t.chi))
        logger.info(f"m={query.m}, α={query.alpha}: d ≤ {d_max}，共 {len(triples)} 个三元组（{workers} 个线程）")
        return triples


family_enumerator = FamilyEnumerator()


def enumerate_families(query: FamilyQuery) -> List[HilbertTriple]:
    return family_enumerator.enumerate(query)


def irrational_scroll_candidates(d_max: int) -> List[ScrollCandidate]:
    """
    双点公式阶段 d² - 5d = 6(q-1) 的全部解 (q ≥ 1)，
    并标注截面族的相容链是否接受
    """
    if d_max < 3:
        raise PreconditionError(f"d_max 必须 ≥ 3，实际 {d_max}")
    candidates = []
    for d in range(3, d_max + 1):
        lhs = d * d - 5 * d
        if lhs % 6:
            continue
        q = lhs // 6 + 1
        if q < 1:
            continue
        a = (d - 1) // 2 if d % 2 else None
        accepted = (
            a is not None
            and 2 * (q - 1) == (a + 1) * (a - 2)
            and 3 * (a + 1) * (a - 2) == (2 * a + 1) * (2 * a - 4)
        )
        candidates.append(ScrollCandidate(d=d, q=q, a=a, accepted=accepted))
    return candidates


def enumerate_irrational_scrolls(d_max: int) -> List[Tuple[int, int]]:
    result = [(c.d, c.q) for c in irrational_scroll_candidates(d_max) if c.accepted]
    logger.info(f"无理直纹面 d ≤ {d_max}: {result}")
    return result


def conic_bundle_candidates() -> List[ConicBundleCandidate]:
    """d² - 9d + 2d' = 16(q-1) 在扫描窗口上的整数解，标注首个失败条件"""
    deg_z_cap = varchenko_bound()
    candidates = []
    for d_prime in CONIC_D_PRIME_RANGE:
        bound = castelnuovo_max_genus(d_prime, CONIC_BASE_EMBEDDING)
        for d in CONIC_D_RANGE:
            lhs = d * d - 9 * d + 2 * d_prime
            if lhs < 0 or lhs % 16:
                continue
            q = lhs // 16 + 1
            delta = 3 * d - 4 * d_prime
            deg_z = d + 6 * d_prime
            if delta < 0:
                rejected_by = "delta"
            elif deg_z > deg_z_cap:
                rejected_by = "deg_z"
            elif q > bound:
                rejected_by = "castelnuovo"
            else:
                rejected_by = None
            candidates.append(ConicBundleCandidate(
                d=d, q=q, d_prime=d_prime, delta=delta, deg_z=deg_z,
                castelnuovo_bound=bound, rejected_by=rejected_by,
            ))
    return candidates


def enumerate_quartic_conic_bundles() -> List[ConicBundleSolution]:
    solutions = []
    for c in conic_bundle_candidates():
        if not c.accepted:
            logger.debug(f"二次曲线丛候选 d={c.d}, d'={c.d_prime}, q={c.q} 被 {c.rejected_by} 排除")
            continue
        qm1 = c.q - 1
        solutions.append(ConicBundleSolution(
            d=c.d, q=c.q, delta=c.delta, d_prime=c.d_prime,
            k2=-8 * qm1 - c.delta,
            hk=4 * qm1 - (c.d - c.delta) // 2,
            c2=-4 * qm1 + c.delta,
            deg_z=c.deg_z,
        ))
    solutions.sort(key=lambda s: (s.d, s.d_prime, s.q))
    logger.info(f"四次超曲面上的二次曲线丛解: {len(solutions)} 个")
    return solutions


def plane_bundle_degrees(sol: ConicBundleSolution) -> PlaneBundleDegrees:
    """底曲线上秩3丛 U* 的次数及其分裂 O ⊕ F*"""
    two_deg = sol.d - sol.hk + 4 * (sol.q - 1)
    if two_deg % 2:
        raise PreconditionError(f"(d - H·K)/2 + 2(q-1) 不是整数: {Fraction(two_deg, 2)}")
    deg_u = two_deg // 2
    if deg_u != sol.d_prime:
        raise PreconditionError(f"deg U* = {deg_u} 与 d' = {sol.d_prime} 不一致")
    half = deg_u // 2
    return PlaneBundleDegrees(
        deg_u=deg_u,
        summand_degrees=(0, half, deg_u - half),
        cone_degree=deg_u,
    )


def admissible_quartic_deg_z(d: int) -> List[DegZEntry]:
    """四次超曲面情形 3d ≤ deg Z ≤ 45 且 deg Z ≡ d² (mod 8) 的取值及稳定性分支"""
    if not 5 <= d <= 11:
        raise PreconditionError(f"d 必须在 5..11 内，实际 d = {d}")
    entries = []
    for deg_z in range(3 * d, varchenko_bound() + 1):
        if (deg_z - d * d) % 8:
            continue
        discriminant = quartic_bundle_discriminant(d, deg_z)
        branch = DegZBranch.STABLE if discriminant >= 0 else DegZBranch.UNSTABLE
        entries.append(DegZEntry(deg_z=deg_z, branch=branch, discriminant=int(discriminant)))
    return entries


def m5_trivial_class_search(relax_hk_below_d: bool = False, relax_bmy: bool = False) -> List[SurfaceInvariants]:
    """
    五次超曲面上一般型分支的穷举：
    χ ∈ {1, 2}，6χ < K² ≤ min(d-1, 14, 9χ)，1 ≤ H·K < d，(H·K)² ≥ d·K²，
    H·K 由双点公式 d² - 10d - 5H·K = 2K² - 12χ 解出
    """
    survivors = []
    for chi in M5_CHI_VALUES:
        for d in M5_D_RANGE:
            k2_max = min(d - 1, M5_K2_CAP)
            if not relax_bmy:
                k2_max = min(k2_max, 9 * chi)
            for k2 in range(6 * chi + 1, k2_max + 1):
                numerator = d * d - 10 * d - 2 * k2 + 12 * chi
                if numerator % 5:
                    continue
                hk = numerator // 5
                if hk < 1:
                    continue
                if not relax_hk_below_d and hk >= d:
                    continue
                if hk * hk < d * k2:
                    continue
                survivors.append(SurfaceInvariants(d=d, hk=hk, k2=k2, chi=chi))
    survivors.sort(key=lambda s: (s.chi, s.d, s.k2))
    logger.info(f"五次平凡类穷举: {len(survivors)} 个幸存者")
    return survivors


def quadric_scroll_contradiction(d: int) -> Tuple[int, int]:
    """H = 2F 的情形：由 2(g-1) = d(d-5)/2 得 deg Z = d，与 deg Z < d 矛盾"""
    if d <= 0 or d % 4:
        raise PreconditionError(f"d 必须是4的正倍数，实际 d = {d}")
    two_g_minus_2 = d * (d - 5) // 2
    deg_z = d * d - 4 * d - 2 * two_g_minus_2
    return deg_z, d
