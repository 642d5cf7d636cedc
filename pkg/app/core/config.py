"""
配置文件
包含所有环境变量和应用设置
"""

from typing import Optional
from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """应用配置类"""

    # 应用基本设置
    APP_NAME: str = Field("P4曲面几何计算", description="应用名称")
    APP_VERSION: str = Field("1.0.0", description="应用版本")
    DEBUG: bool = Field(False, description="调试模式，打开后日志级别降为DEBUG")

    # HTTP服务设置（serve子命令）
    HOST: str = "0.0.0.0"
    PORT: int = 6007

    # 日志设置 - 默认只输出警告以上，保持stdout报表干净
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None

    # 枚举设置
    P4GEO_THREADS: Optional[int] = Field(None, ge=1, description="枚举工作线程上限")

    # 输出设置
    DEFAULT_FORMAT: str = "table"

    # 配置文件路径
    CONFIG_DIR: str = "/app/config"  # Docker容器中的配置目录

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        # 允许从环境变量覆盖配置
        env_prefix = ""


# 创建全局设置实例
settings = Settings()
