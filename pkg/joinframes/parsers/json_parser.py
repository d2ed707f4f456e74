"""JSON解析器"""

import json
from typing import Any, Dict, Optional, Union

from joinframes.errors import ParseError
from joinframes.model.workspace import Workspace
from joinframes.parsers.base_parser import BaseParser


class JSONParser(BaseParser):
    """JSON解析器，读取 export --format json 的输出"""

    def parse(self, content: Union[str, bytes], options: Optional[Dict[str, Any]] = None) -> Workspace:
        options = options or {}
        content = self._normalize_content(content)
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from None
        return Workspace.from_dict(data, options.get("source"))
