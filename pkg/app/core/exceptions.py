"""
异常定义
"""


class GeometryError(ValueError):
    """几何计算异常基类"""


class PreconditionError(GeometryError):
    """操作前置条件不满足（m越界、α取排除值、H²≤0等）"""


class LatticeMismatchError(GeometryError):
    """两个除子类不属于同一个格"""


class InvalidQueryError(GeometryError):
    """枚举查询参数无效"""


class ReportFormatError(GeometryError):
    """报表格式无效"""


class InconsistentInvariantsError(GeometryError):
    """构造出的不变量违反双点公式等恒等式"""
