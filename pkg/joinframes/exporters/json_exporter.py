"""JSON 导出，键排序以保证输出可比较"""

import json
from typing import Any, Dict, Optional, Tuple

from joinframes.exporters.base_exporter import BaseExporter
from joinframes.model.lattice import FiniteLattice
from joinframes.model.workspace import Workspace


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


class WorkspaceJSONExporter(BaseExporter):
    """工作区 -> JSON，可由 JSONParser 读回"""

    def export(self, obj: Workspace, options: Optional[Dict[str, Any]] = None) -> str:
        return dumps(obj.to_dict())

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("workspace", "json")


class LatticeJSONExporter(BaseExporter):
    def export(self, obj: FiniteLattice, options: Optional[Dict[str, Any]] = None) -> str:
        return dumps({
            "size": obj.size,
            "elements": [obj.label(x) for x in range(obj.size)],
            "covers": [[obj.label(i), obj.label(j)] for i, j in obj.poset.covers],
        })

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("lattice", "json")


class ReportJSONExporter(BaseExporter):
    """命令结果字典 -> JSON"""

    def export(self, obj: Dict[str, Any], options: Optional[Dict[str, Any]] = None) -> str:
        return dumps(obj)

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("report", "json")
