"""
命令行入口
families / check / catalog / serve

退出码：0 成功或记录一致，1 被检查的记录不满足双点公式，2 用法错误
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from app.core.config import settings
from app.core.config_loader import config_loader
from app.core.exceptions import GeometryError
from app.core.rational import parse_rational
from app.models import ReportFormat, SurfaceInvariants
from app.services.catalog import CATALOG_NAMES, build_catalog
from app.services.checker import check_surface
from app.services.enumeration import enumerate_families, make_family_query
from app.services.invariants import complete_triple
from app.services.report_writer import model_rows, render_catalog, render_record, render_rows

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2

FAMILY_COLUMNS = ("d", "hk", "k2", "chi")
CHECK_COLUMNS = ("name", "kind", "passed", "detail")


def _on_off(value: str) -> bool:
    lowered = value.lower()
    if lowered not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"只接受 on/off: {value}")
    return lowered == "on"


def _usage_error(message: str) -> int:
    print(f"错误: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit(text: str):
    sys.stdout.write(text + "\n")


def cmd_families(args: argparse.Namespace) -> int:
    try:
        alpha = parse_rational(args.alpha)
        query = make_family_query(args.m, alpha, use_hodge=args.hodge, require_hk_positive=args.hk_positive)
        triples = enumerate_families(query)
    except (GeometryError, ValueError) as e:
        return _usage_error(str(e))

    # 补上 K² = αχ，json行可以直接交给 check
    records = [complete_triple(t, int(alpha * t.chi)) for t in triples]
    rows = model_rows(records, exclude={"q"})
    _emit(render_rows(rows, args.format, columns=FAMILY_COLUMNS))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        return _usage_error(f"无法读取 {path}: {e}")
    if not text.strip():
        return _usage_error(f"{path} 为空")

    try:
        inv = SurfaceInvariants.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        return _usage_error(f"{path} 不是有效的不变量记录: {e}")

    try:
        l_sq = parse_rational(args.l_sq) if args.l_sq is not None else None
    except ValueError as e:
        return _usage_error(str(e))

    report = check_surface(inv, l_sq=l_sq)
    if args.format == ReportFormat.JSON.value:
        _emit(render_record(report.model_dump(mode="json"), args.format))
    else:
        rows = [line.model_dump(mode="json") for line in report.lines]
        _emit(render_rows(rows, args.format, columns=CHECK_COLUMNS))
    return EXIT_OK if report.dpf_holds else EXIT_INCONSISTENT


def cmd_catalog(args: argparse.Namespace) -> int:
    try:
        table = build_catalog(args.name, args.d)
    except GeometryError as e:
        return _usage_error(str(e))
    _emit(render_catalog(table, args.format))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    try:
        uvicorn.run("main:app", host=args.host, port=args.port, reload=False, log_level="info")
    except KeyboardInterrupt:
        logger.info("收到中断信号，正在关闭...")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    default_format = config_loader.get_default_format()
    formats = [f.value for f in ReportFormat]

    parser = argparse.ArgumentParser(prog="p4geo", description=settings.APP_NAME)
    subparsers = parser.add_subparsers(dest="command", required=True)

    families = subparsers.add_parser("families", help="按 (m, α) 枚举Hilbert三元组")
    families.add_argument("--m", type=int, required=True, help="超曲面次数")
    families.add_argument("--alpha", required=True, help="斜率 K²/χ，整数或 p/q")
    families.add_argument("--hodge", type=_on_off, default=False, help="Hodge指标过滤 on/off")
    families.add_argument("--hk-positive", dest="hk_positive", type=_on_off, default=False,
                          help="要求 H·K ≥ 1 on/off")
    families.add_argument("--format", choices=formats, default=default_format)
    families.set_defaults(handler=cmd_families)

    check = subparsers.add_parser("check", help="检查一条不变量JSON记录")
    check.add_argument("path", help="SurfaceInvariants JSON 文件")
    check.add_argument("--l-sq", dest="l_sq", default=None, help="Albanese像上除子L的自交数，整数或 p/q")
    check.add_argument("--format", choices=formats, default=default_format)
    check.set_defaults(handler=cmd_check)

    catalog = subparsers.add_parser("catalog", help="输出枚举与构形目录")
    catalog.add_argument("name", choices=CATALOG_NAMES)
    catalog.add_argument("--d", type=int, default=None, help="quartic-degz 的次数 / scrolls 的扫描上限")
    catalog.add_argument("--format", choices=formats, default=default_format)
    catalog.set_defaults(handler=cmd_catalog)

    serve = subparsers.add_parser("serve", help="启动HTTP服务")
    serve.add_argument("--host", default=settings.HOST)
    serve.add_argument("--port", type=int, default=settings.PORT)
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    return args.handler(args)
