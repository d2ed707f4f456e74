"""导出模块：dot / json / table"""

from joinframes.errors import InputError
from joinframes.exporters.base_exporter import BaseExporter
from joinframes.exporters.dot_exporter import LatticeDotExporter, PosetDotExporter, digraph
from joinframes.exporters.json_exporter import LatticeJSONExporter, ReportJSONExporter, WorkspaceJSONExporter
from joinframes.exporters.table_exporter import LatticeTableExporter, ReportTableExporter

__all__ = [
    "BaseExporter",
    "PosetDotExporter",
    "LatticeDotExporter",
    "WorkspaceJSONExporter",
    "LatticeJSONExporter",
    "ReportJSONExporter",
    "ReportTableExporter",
    "LatticeTableExporter",
    "digraph",
    "get_exporter",
]

# 导出映射
exporter_mapping = {
    ("workspace", "dot"): PosetDotExporter,
    ("workspace", "json"): WorkspaceJSONExporter,
    ("lattice", "dot"): LatticeDotExporter,
    ("lattice", "json"): LatticeJSONExporter,
    ("lattice", "table"): LatticeTableExporter,
    ("report", "json"): ReportJSONExporter,
    ("report", "table"): ReportTableExporter,
}


def get_exporter(kind: str, format: str) -> BaseExporter:
    """获取导出器

    Args:
        kind: 对象类型（workspace、lattice、report）
        format: 输出格式

    Returns:
        对应的导出器实例
    """
    exporter_class = exporter_mapping.get((kind.lower(), format.lower()))
    if not exporter_class:
        raise InputError(f"cannot export {kind} as {format}")
    return exporter_class()
