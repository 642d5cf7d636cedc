"""
P4曲面几何计算主程序
python main.py families|check|catalog|serve ...
"""

import sys
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from loguru import logger

from app.core.config import settings
from app.core.config_loader import config_loader
from app.core.exceptions import GeometryError
from app.core.logger import setup_logger
from app.api.routes import router


@asynccontextmanager
async def lifespan(app: FastAPI):
    """应用生命周期管理"""
    logger.info("正在启动P4曲面几何服务...")
    config_loader.load_config()
    if not config_loader.validate_config():
        logger.warning("配置校验未通过，使用内置默认值")
    logger.info(f"配置摘要: {config_loader.get_config_summary()}")
    yield
    logger.info("P4曲面几何服务已关闭")


# 创建FastAPI应用
app = FastAPI(
    title=settings.APP_NAME,
    description="P⁴中光滑曲面的数值不变量、有限性枚举与构形计算",
    version=settings.APP_VERSION,
    lifespan=lifespan
)

# 添加CORS中间件
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(GeometryError)
async def geometry_exception_handler(request: Request, exc: GeometryError):
    logger.warning(f"请求 {request.url.path} 违反前提条件: {exc}")
    return JSONResponse(status_code=400, content={"detail": str(exc)})


# 包含路由
app.include_router(router)


if __name__ == "__main__":
    setup_logger()
    from app.api.cli import main

    sys.exit(main())
