"""
报表输出
table / csv 由 pandas DataFrame 渲染，json 使用 sort_keys 保证输出确定
"""

import json
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel

from app.core.exceptions import ReportFormatError
from app.models import CatalogTable, ReportFormat

Row = Dict[str, Any]

EMPTY_TABLE = "(无结果)"


def parse_format(value: Union[str, ReportFormat]) -> ReportFormat:
    if isinstance(value, ReportFormat):
        return value
    try:
        return ReportFormat(str(value).lower())
    except ValueError as e:
        raise ReportFormatError(f"不支持的输出格式: {value}，可选 table/json/csv") from e


def model_rows(models: Iterable[BaseModel], exclude: Optional[set] = None) -> List[Row]:
    """模型转为JSON兼容的行，有理数为 "p/q" 字符串"""
    return [m.model_dump(mode="json", exclude=exclude) for m in models]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, ensure_ascii=False, sort_keys=True)
    return str(value)


def _frame(rows: Sequence[Row], columns: Optional[Sequence[str]]) -> pd.DataFrame:
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    # 全部转为字符串，避免缺失值把整数列变成浮点
    return pd.DataFrame([[_cell(row.get(c)) for c in columns] for row in rows], columns=list(columns))


def render_rows(rows: Sequence[Row], fmt: Union[str, ReportFormat],
                columns: Optional[Sequence[str]] = None) -> str:
    fmt = parse_format(fmt)
    if fmt is ReportFormat.JSON:
        return json.dumps(list(rows), ensure_ascii=False, sort_keys=True, indent=2)
    frame = _frame(rows, columns)
    if fmt is ReportFormat.CSV:
        return frame.to_csv(index=False, lineterminator="\n").rstrip("\n")
    if frame.empty:
        return EMPTY_TABLE
    return frame.to_string(index=False)


def render_record(record: Row, fmt: Union[str, ReportFormat]) -> str:
    """单条记录：json原样输出，table/csv 展开为 field/value 两列"""
    fmt = parse_format(fmt)
    if fmt is ReportFormat.JSON:
        return json.dumps(record, ensure_ascii=False, sort_keys=True, indent=2)
    rows = [{"field": key, "value": value} for key, value in record.items()]
    return render_rows(rows, fmt, columns=("field", "value"))


def render_catalog(table: CatalogTable, fmt: Union[str, ReportFormat]) -> str:
    fmt = parse_format(fmt)
    if table.is_record:
        return render_record(table.rows[0], fmt)
    if fmt is ReportFormat.JSON:
        if table.payload is not None:
            return json.dumps(table.payload, ensure_ascii=False, sort_keys=True, indent=2)
        return render_rows(table.rows, fmt)
    body = render_rows(table.rows, fmt, columns=table.columns)
    if fmt is ReportFormat.TABLE and table.summary:
        return f"{table.summary}\n{body}"
    return body
