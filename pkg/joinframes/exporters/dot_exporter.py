"""graphviz DOT 导出

偏序集导出为 Hasse 图（传递约简），格导出为覆盖图，节点标签为元素集合。
"""

from typing import Any, Dict, List, Optional, Tuple

from joinframes.exporters.base_exporter import BaseExporter
from joinframes.model.lattice import FiniteLattice
from joinframes.model.workspace import Workspace


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def digraph(name: str, nodes: List[Tuple[str, str]], edges: List[Tuple[str, str]]) -> str:
    """nodes 为 (id, label)，edges 为 (下, 上)，底部在下方"""
    lines = [f"digraph {_quote(name)} {{", "    rankdir=BT;", "    node [shape=box];"]
    for node_id, label in nodes:
        lines.append(f"    {_quote(node_id)} [label={_quote(label)}];")
    for lower, upper in edges:
        lines.append(f"    {_quote(lower)} -> {_quote(upper)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


class PosetDotExporter(BaseExporter):
    """工作区偏序集 -> Hasse 图"""

    def export(self, obj: Workspace, options: Optional[Dict[str, Any]] = None) -> str:
        P = obj.poset
        nodes = [(label, label) for label in P.labels]
        edges = [(P.labels[i], P.labels[j]) for i, j in P.covers]
        return digraph(obj.name or "poset", nodes, edges)

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("workspace", "dot")


class LatticeDotExporter(BaseExporter):
    """有限格（通常是理想格）-> 覆盖图"""

    def export(self, obj: FiniteLattice, options: Optional[Dict[str, Any]] = None) -> str:
        options = options or {}
        nodes = [(f"c{x}", obj.label(x)) for x in range(obj.size)]
        edges = [(f"c{i}", f"c{j}") for i, j in obj.poset.covers]
        return digraph(options.get("name") or "lattice", nodes, edges)

    def get_supported_formats(self) -> Tuple[str, str]:
        return ("lattice", "dot")
