"""解析器包"""

import os

from joinframes.errors import InputError
from joinframes.model.workspace import Workspace
from joinframes.parsers.base_parser import BaseParser
from joinframes.parsers.json_parser import JSONParser
from joinframes.parsers.workspace_parser import WorkspaceParser

__all__ = [
    "BaseParser",
    "WorkspaceParser",
    "JSONParser",
    "get_parser",
    "parse_workspace",
    "load_workspace",
]

# 解析器映射
parser_mapping = {
    "poset": WorkspaceParser,
    "json": JSONParser,
}


def get_parser(format: str) -> BaseParser:
    """获取解析器

    Args:
        format: 格式（poset 或 json）

    Returns:
        对应的解析器实例
    """
    parser_class = parser_mapping.get(format.lower())
    if not parser_class:
        raise InputError(f"unsupported input format '{format}'")
    return parser_class()


def parse_workspace(text: str) -> Workspace:
    return WorkspaceParser().parse(text)


def load_workspace(path: str) -> Workspace:
    """按扩展名选择解析器读取文件，.json 以外一律按文本格式解析"""
    ext = os.path.splitext(path)[1].lstrip(".").lower()
    parser = get_parser("json" if ext == "json" else "poset")
    try:
        with open(path, "rb") as f:
            content = f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parser.parse(content, {"source": path})
