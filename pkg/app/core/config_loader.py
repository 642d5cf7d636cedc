"""
配置加载器模块
用于加载YAML格式的业务配置文件
"""

import yaml
from typing import Dict, Any
from pathlib import Path
from loguru import logger
from .config import settings


class ConfigLoader:
    """配置加载器"""

    def __init__(self, config_file: str = "p4geo.yaml"):
        self.config_data: Dict[str, Any] = {}
        self.config_file = config_file
        self.load_config()

    def _resolve_path(self) -> Path:
        """构建配置文件路径，容器目录不存在时回退到当前目录"""
        config_path = Path(settings.CONFIG_DIR) / self.config_file
        if not config_path.exists():
            current_dir_config = Path("config") / self.config_file
            if current_dir_config.exists():
                return current_dir_config
            package_config = Path(__file__).resolve().parents[2] / "config" / self.config_file
            if package_config.exists():
                return package_config
        return config_path

    def load_config(self):
        """加载配置文件"""
        try:
            config_path = self._resolve_path()
            if not config_path.exists():
                logger.warning(f"配置文件不存在: {config_path}，使用内置默认值")
                self.config_data = {}
                return

            with open(config_path, 'r', encoding='utf-8') as file:
                self.config_data = yaml.safe_load(file) or {}

            logger.debug(f"配置文件加载成功: {config_path}")

        except yaml.YAMLError as e:
            logger.error(f"YAML解析错误: {e}")
            self.config_data = {}

    def get_config(self, key: str, default: Any = None) -> Any:
        """获取配置值，支持点号分隔的层级键"""
        value = self.config_data
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def get_enumeration_config(self) -> Dict[str, Any]:
        """获取枚举默认参数"""
        return self.get_config('enumeration') or {}

    def get_output_config(self) -> Dict[str, Any]:
        """获取输出配置"""
        return self.get_config('output') or {}

    def get_scroll_d_max(self) -> int:
        return int((self.get_enumeration_config().get("scrolls") or {}).get("d_max", 100))

    def get_quartic_degz_default(self) -> int:
        return int((self.get_enumeration_config().get("quartic_degz") or {}).get("d_default", 11))

    def get_default_format(self) -> str:
        return self.get_output_config().get("default_format", settings.DEFAULT_FORMAT)

    def validate_config(self) -> bool:
        """验证配置文件"""
        valid = True
        for section in ('enumeration', 'output'):
            if not self.get_config(section):
                logger.warning(f"缺少配置节: {section}")
                valid = False

        d_max = self.get_config('enumeration.scrolls.d_max', 100)
        if not isinstance(d_max, int) or d_max < 3:
            logger.warning(f"enumeration.scrolls.d_max 无效: {d_max}")
            valid = False

        if self.get_default_format() not in ('table', 'json', 'csv'):
            logger.warning(f"output.default_format 无效: {self.get_default_format()}")
            valid = False

        if valid:
            logger.debug("配置文件验证通过")
        return valid

    def get_config_summary(self) -> Dict[str, Any]:
        """获取配置摘要"""
        return {
            'scroll_d_max': self.get_scroll_d_max(),
            'default_format': self.get_default_format(),
            'threads': settings.P4GEO_THREADS or 1,
            'config_file': str(self._resolve_path())
        }


# 全局配置加载器实例
config_loader = ConfigLoader()
