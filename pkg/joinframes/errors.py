"""异常定义模块

所有异常都继承自 JoinFramesError，CLI 根据异常类型映射退出码：
InputError -> 2，CapExceededError -> 3，InvariantViolation -> 1。
"""

from typing import Optional


class JoinFramesError(Exception):
    """joinframes 的基础异常"""


class InputError(JoinFramesError, ValueError):
    """输入或用法错误"""


class ParseError(InputError):
    """工作区文本解析错误，带行号"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PosetError(InputError):
    """偏序集构造错误（重复标签、未知标签、环）"""


class OwnerMismatchError(InputError):
    """集合或规格属于不同的偏序集"""


class JoinSpecError(InputError):
    """连接规格校验失败"""


class NotALatticeError(InputError):
    """输入不是格"""


class PreconditionError(InputError):
    """操作的前置条件不满足"""


class CapExceededError(JoinFramesError):
    """枚举超过配置的上限"""

    def __init__(self, what: str, cap: int, needed: Optional[int] = None):
        self.what = what
        self.cap = cap
        self.needed = needed
        if needed is None:
            message = f"{what} exceeds the cap of {cap}"
        else:
            message = f"{what} needs {needed}, cap is {cap}"
        super().__init__(message)


class InvariantViolation(JoinFramesError):
    """定理断言失败"""
