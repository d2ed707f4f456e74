"""引擎模块"""

from joinframes.engine.engine import BUILTIN_SPECS, Engine

__all__ = ["Engine", "BUILTIN_SPECS"]
