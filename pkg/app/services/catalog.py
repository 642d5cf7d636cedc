"""
catalog 目录：把各枚举器与直纹面计算整理为统一的表格
命令行与HTTP接口共用
"""

import json
from typing import Callable, Dict, Optional

from loguru import logger

from app.core.config_loader import config_loader
from app.core.exceptions import InvalidQueryError
from app.models import CatalogTable
from app.services.enumeration import (
    admissible_quartic_deg_z,
    enumerate_quartic_conic_bundles,
    irrational_scroll_candidates,
    plane_bundle_degrees,
)
from app.services.report_writer import model_rows
from app.services.scroll_segre import (
    appendix_degrees,
    incidence_to_json,
    scroll_sanity_report,
    segre_configuration,
)



def _conic_bundles(d: Optional[int]) -> CatalogTable:
    solutions = enumerate_quartic_conic_bundles()
    summary = None
    if solutions:
        bundle = plane_bundle_degrees(solutions[0])
        summary = (f"U*: rank={bundle.rank}, deg={bundle.deg_u}, "
                   f"summands={list(bundle.summand_degrees)}, cone_degree={bundle.cone_degree}")
    return CatalogTable(
        name="conic-bundles",
        columns=("d", "q", "delta", "d_prime", "k2", "hk", "c2", "deg_z"),
        rows=tuple(model_rows(solutions)),
        summary=summary,
    )


def _scrolls(d: Optional[int]) -> CatalogTable:
    d_max = d if d is not None else config_loader.get_scroll_d_max()
    candidates = irrational_scroll_candidates(d_max)
    accepted = [(c.d, c.q) for c in candidates if c.accepted]
    return CatalogTable(
        name="scrolls",
        columns=("d", "q", "a", "accepted"),
        rows=tuple(model_rows(candidates)),
        summary=f"d_max={d_max}, accepted={accepted}",
    )


def _quartic_degz(d: Optional[int]) -> CatalogTable:
    degree = d if d is not None else config_loader.get_quartic_degz_default()
    rows = [dict(row, d=degree) for row in model_rows(admissible_quartic_deg_z(degree))]
    return CatalogTable(
        name="quartic-degz",
        columns=("d", "deg_z", "branch", "discriminant"),
        rows=tuple(rows),
    )


def _segre_config(d: Optional[int]) -> CatalogTable:
    cfg = segre_configuration()
    degrees = {len(cfg.planes_through(p)) for p in cfg.points}
    sizes = {len(plane.members) for plane in cfg.planes}
    rows = [
        {"kind": plane.kind.value, "index": plane.name, "members": ["·".join(m) for m in plane.members]}
        for plane in cfg.planes
    ]
    return CatalogTable(
        name="segre-config",
        columns=("kind", "index", "members"),
        rows=tuple(rows),
        summary=(f"{len(cfg.points)} points / {len(cfg.planes)} planes / "
                 f"{'/'.join(map(str, sorted(sizes)))} per plane / "
                 f"{'/'.join(map(str, sorted(degrees)))} per point"),
        payload=json.loads(incidence_to_json(cfg)),
    )


def _scroll_report(d: Optional[int]) -> CatalogTable:
    record = scroll_sanity_report().model_dump(mode="json")
    return CatalogTable(name="scroll-report", columns=tuple(record), rows=(record,), is_record=True)


def _appendix_degrees(d: Optional[int]) -> CatalogTable:
    record = appendix_degrees().model_dump(mode="json")
    return CatalogTable(name="appendix-degrees", columns=tuple(record), rows=(record,), is_record=True)


CATALOG_BUILDERS: Dict[str, Callable[[Optional[int]], CatalogTable]] = {
    "conic-bundles": _conic_bundles,
    "scrolls": _scrolls,
    "quartic-degz": _quartic_degz,
    "segre-config": _segre_config,
    "scroll-report": _scroll_report,
    "appendix-degrees": _appendix_degrees,
}

CATALOG_NAMES = tuple(CATALOG_BUILDERS)


def build_catalog(name: str, d: Optional[int] = None) -> CatalogTable:
    builder = CATALOG_BUILDERS.get(name)
    if builder is None:
        raise InvalidQueryError(f"未知目录: {name}，可选 {', '.join(CATALOG_NAMES)}")
    table = builder(d)
    logger.debug(f"目录 {name}: {len(table.rows)} 行")
    return table
