"""
报表相关的数据模型
"""

from enum import Enum
from typing import Any, Dict, Optional, Tuple
from pydantic import Field

from .base import ExactModel


class ReportFormat(str, Enum):
    """输出格式"""
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class CheckKind(str, Enum):
    """检查项类别"""
    IDENTITY = "identity"   # P⁴中任意光滑曲面都必须满足
    FILTER = "filter"       # 落在m次超曲面上的必要条件
    INFO = "info"           # 只报告数值


class CheckLine(ExactModel):
    """单条约束检查结果，info类的 passed 为空"""
    name: str = Field(..., description="约束名称")
    kind: CheckKind = Field(default=CheckKind.IDENTITY, description="检查项类别")
    passed: Optional[bool] = Field(..., description="是否通过")
    detail: str = Field(default="", description="残差或数值说明")


class CheckReport(ExactModel):
    """check命令的完整结果"""
    lines: Tuple[CheckLine, ...]
    dpf_holds: bool


class CatalogTable(ExactModel):
    """catalog输出：行、列顺序、摘要行，以及可选的专用JSON结构"""
    name: str
    columns: Tuple[str, ...]
    rows: Tuple[Dict[str, Any], ...]
    summary: Optional[str] = Field(default=None, description="表格前的摘要行")
    is_record: bool = Field(default=False, description="单条记录，按 field/value 展开")
    payload: Optional[Dict[str, Any]] = Field(default=None, description="json格式下替代rows的结构")
