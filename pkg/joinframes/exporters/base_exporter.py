"""基础导出器类"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple


class BaseExporter(ABC):
    """基础导出器抽象类"""

    @abstractmethod
    def export(self, obj: Any, options: Optional[Dict[str, Any]] = None) -> str:
        """导出方法

        Args:
            obj: 待导出的对象
            options: 导出选项

        Returns:
            str: 导出的文本
        """
        pass

    @abstractmethod
    def get_supported_formats(self) -> Tuple[str, str]:
        """获取支持的格式

        Returns:
            tuple: (对象类型, 输出格式)
        """
        pass
