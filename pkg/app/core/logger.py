"""
日志配置模块
stdout 只输出报表，控制台日志一律写 stderr
"""

import sys
from pathlib import Path
from typing import Optional

from loguru import logger

from .config import settings

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)

FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} | {message}"

# (文件名, 级别, 轮转, 保留)
_ERROR_SINK = ("error.log", "ERROR", "50 MB", "60 days")


def resolve_level(level: Optional[str] = None) -> str:
    """显式参数优先，其次 DEBUG 开关，最后 LOG_LEVEL"""
    if level:
        return level.upper()
    if settings.DEBUG:
        return "DEBUG"
    return settings.LOG_LEVEL.upper()


def _add_file_sinks(log_file: Path, level: str):
    log_file.parent.mkdir(parents=True, exist_ok=True)
    logger.add(log_file, format=FILE_FORMAT, level=level, rotation="100 MB",
               retention="30 days", compression="zip", encoding="utf-8")

    name, error_level, rotation, retention = _ERROR_SINK
    logger.add(log_file.parent / name, format=FILE_FORMAT, level=error_level, rotation=rotation,
               retention=retention, compression="zip", encoding="utf-8")


def setup_logger(level: Optional[str] = None) -> str:
    """重建全部日志处理器，返回实际生效的级别"""
    logger.remove()
    level = resolve_level(level)
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level, colorize=True)

    if settings.LOG_FILE:
        _add_file_sinks(Path(settings.LOG_FILE), level)
        logger.info(f"日志文件: {settings.LOG_FILE}")

    logger.debug(f"日志系统初始化完成，级别 {level}")
    return level
