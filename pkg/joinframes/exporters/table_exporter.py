"""纯文本表格导出"""

from typing import Any, Dict, List, Optional, Tuple

from joinframes.exporters.base_exporter import BaseExporter
from joinframes.model.lattice import FiniteLattice


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        if value and all(isinstance(v, str) for v in value):
            return "{" + ",".join(value) + "}"
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_cell(v)}" for k, v in sorted(value.items()))
    return str(value)


def _render(rows: List[Tuple[str, str]]) -> str:
    if not rows:
        return ""
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {value}\n" for key, value in rows)


class ReportTableExporter(BaseExporter):
    """每个键一行；键为 "rows" 的列表逐项展开"""

    def export(self, obj: Dict[str, Any], options: Optional[Dict[str, Any]] = None) -> str:
        rows = []
        for key in sorted(obj):
            if key == "rows":
                continue
            rows.append((key, _cell(obj[key])))
        text = _render(rows)
        for item in obj.get("rows", []):
            text += _cell(item) + "\n"
        return text

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("report", "table")


class LatticeTableExporter(BaseExporter):
    def export(self, obj: FiniteLattice, options: Optional[Dict[str, Any]] = None) -> str:
        rows = []
        for x in range(obj.size):
            above = [obj.label(j) for i, j in obj.poset.covers if i == x]
            rows.append((obj.label(x), "covered by " + (" ".join(above) if above else "-")))
        return _render(rows)

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("lattice", "table")
