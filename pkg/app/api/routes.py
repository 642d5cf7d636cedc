"""
API路由模块
"""

import asyncio
from typing import Any, Dict, List, Optional

from fastapi import APIRouter, HTTPException, Query
from loguru import logger
from pydantic import BaseModel, Field

from app.core.config import settings
from app.core.config_loader import config_loader
from app.core.exceptions import GeometryError
from app.core.rational import parse_rational
from app.models import SurfaceInvariants
from app.services.catalog import build_catalog
from app.services.checker import check_surface
from app.services.enumeration import enumerate_families, make_family_query
from app.services.invariants import complete_triple
from app.services.report_writer import model_rows


class FamiliesResponse(BaseModel):
    """曲面族枚举响应"""
    status: str = Field(default="success", description="响应状态")
    m: int = Field(description="超曲面次数")
    alpha: str = Field(description="斜率 p/q")
    count: int = Field(description="三元组个数")
    data: List[Dict[str, Any]] = Field(default_factory=list, description="(d, hk, k2, chi) 列表")


class CheckResponse(BaseModel):
    """不变量检查响应"""
    status: str = Field(default="success", description="响应状态")
    dpf_holds: bool = Field(description="双点公式是否成立")
    lines: List[Dict[str, Any]] = Field(default_factory=list, description="逐条检查结果")


class CatalogResponse(BaseModel):
    """目录响应"""
    status: str = Field(default="success", description="响应状态")
    name: str = Field(description="目录名")
    summary: Optional[str] = Field(default=None, description="摘要")
    data: Any = Field(default=None, description="目录内容")


router = APIRouter(prefix=config_loader.get_config("http.prefix", "/geoApi"), tags=["P4曲面几何"])


@router.get("/health")
async def health_check():
    """健康检查接口"""
    return {
        "status": "healthy",
        "service": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "threads": settings.P4GEO_THREADS or 1,
    }


@router.get("/families", response_model=FamiliesResponse)
async def families(m: int = Query(..., description="超曲面次数"),
                   alpha: str = Query(..., description="斜率，整数或 p/q"),
                   hodge: bool = Query(default=False),
                   hk_positive: bool = Query(default=False)):
    """按 (m, α) 枚举Hilbert三元组"""
    try:
        value = parse_rational(alpha)
        query = make_family_query(m, value, use_hodge=hodge, require_hk_positive=hk_positive)
        triples = await asyncio.to_thread(enumerate_families, query)
    except (GeometryError, ValueError) as e:
        logger.warning(f"families 请求无效: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    records = [complete_triple(t, int(value * t.chi)) for t in triples]
    return FamiliesResponse(
        m=m,
        alpha=query.model_dump(mode="json")["alpha"],
        count=len(records),
        data=model_rows(records, exclude={"q"}),
    )


@router.post("/check", response_model=CheckResponse)
async def check(inv: SurfaceInvariants, l_sq: Optional[str] = Query(default=None, description="L²，整数或 p/q")):
    """检查一条不变量记录"""
    try:
        report = check_surface(inv, l_sq=parse_rational(l_sq) if l_sq is not None else None)
    except ValueError as e:
        logger.warning(f"check 请求无效: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    return CheckResponse(
        dpf_holds=report.dpf_holds,
        lines=[line.model_dump(mode="json") for line in report.lines],
    )


@router.get("/catalog/{name}", response_model=CatalogResponse)
async def catalog(name: str, d: Optional[int] = Query(default=None)):
    """输出枚举与构形目录"""
    try:
        table = await asyncio.to_thread(build_catalog, name, d)
    except GeometryError as e:
        logger.warning(f"catalog 请求无效: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    if table.payload is not None:
        data = table.payload
    elif table.is_record:
        data = table.rows[0]
    else:
        data = list(table.rows)
    return CatalogResponse(name=table.name, summary=table.summary, data=data)
