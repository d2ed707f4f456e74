"""基础解析器"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Union

from joinframes.errors import ParseError
from joinframes.model.workspace import Workspace


class BaseParser(ABC):
    """基础解析器类"""

    @abstractmethod
    def parse(self, content: Union[str, bytes], options: Optional[Dict[str, Any]] = None) -> Workspace:
        """解析内容为工作区

        Args:
            content: 输入内容
            options: 解析选项，目前只认 "source"（来源路径）

        Returns:
            Workspace: 工作区
        """
        pass

    def _normalize_content(self, content: Union[str, bytes]) -> str:
        """规范化内容

        Args:
            content: 输入内容

        Returns:
            str: 规范化后的内容
        """
        if isinstance(content, bytes):
            try:
                return content.decode("utf-8")
            except UnicodeDecodeError as e:
                raise ParseError(f"input is not UTF-8: {e}") from None
        return content
