"""工作区模型：一个偏序集及其上按名称登记的连接规格"""

import json
import logging
from typing import Any, Dict, List, Optional

from joinframes.errors import InputError, JoinSpecError, ParseError
from joinframes.model.poset import Poset, build_poset
from joinframes.spec.joinspec import JoinSpec, make_joinspec

logger = logging.getLogger(__name__)

FORMAT_NAME = "joinframes-workspace"
FORMAT_VERSION = 1


class Workspace:
    """解析结果

    Args:
        poset: 唯一的偏序集
        name: 偏序集名称（可选）
        source: 来源文件路径（可选）
    """

    def __init__(self, poset: Poset, name: Optional[str] = None, source: Optional[str] = None):
        self.poset = poset
        self.name = name
        self.source = source
        self.specs: Dict[str, JoinSpec] = {}
        # 名称 -> 声明所在行号
        self.provenance: Dict[str, Optional[int]] = {}

    def add_spec(self, spec: JoinSpec, line: Optional[int] = None) -> None:
        """登记连接规格，名称在工作区内唯一"""
        if not spec.name:
            raise JoinSpecError("workspace join-specifications must be named")
        if spec.name in self.specs:
            raise ParseError(f"join-specification '{spec.name}' declared twice", line)
        if spec.owner != self.poset:
            raise JoinSpecError(f"join-specification '{spec.name}' belongs to another poset")
        self.specs[spec.name] = spec
        self.provenance[spec.name] = line

    def get_spec(self, name: str) -> JoinSpec:
        try:
            return self.specs[name]
        except KeyError:
            known = ", ".join(self.specs) or "none"
            raise InputError(f"unknown join-specification '{name}' (declared: {known})") from None

    def __eq__(self, other):
        # 结构相等：偏序集与各规格的成员相同，不比较来源信息
        if not isinstance(other, Workspace):
            return NotImplemented
        if self.poset != other.poset or self.name != other.name:
            return False
        if list(self.specs) != list(other.specs):
            return False
        return all(self.specs[k].mask_set == other.specs[k].mask_set for k in self.specs)

    def __repr__(self):
        return f"Workspace(poset={self.poset!r}, specs={list(self.specs)})"

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式

        Returns:
            Dict[str, Any]: 与 docs/json_schema.md 一致的结构
        """
        P = self.poset
        return {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "poset": {
                "name": self.name,
                "elements": list(P.labels),
                "covers": [[P.labels[i], P.labels[j]] for i, j in P.covers],
            },
            "joinspecs": [
                {
                    "name": name,
                    "members": [P.labels_of(mask) for mask in spec.nontrivial_masks()],
                }
                for name, spec in self.specs.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: Optional[str] = None) -> "Workspace":
        """从字典加载工作区

        Raises:
            ParseError: 结构不符合约定
        """
        if not isinstance(data, dict) or data.get("format") != FORMAT_NAME:
            raise ParseError(f"not a {FORMAT_NAME} document")
        if data.get("version") != FORMAT_VERSION:
            raise ParseError(f"unsupported workspace version {data.get('version')!r}")
        try:
            poset_data = data["poset"]
            poset = build_poset(poset_data["elements"], [tuple(c) for c in poset_data.get("covers", [])])
            workspace = cls(poset, poset_data.get("name"), source)
            for entry in data.get("joinspecs", []):
                members: List[List[str]] = entry["members"]
                workspace.add_spec(make_joinspec(poset, members, entry["name"]))
        except (KeyError, TypeError) as e:
            raise ParseError(f"malformed workspace document: {e}") from None
        return workspace

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")
        logger.info(f"workspace saved to {path}")
