"""joinframes: join-specifications, ideal lattices and frame generation on finite posets"""

__version__ = "1.0.0"
__author__ = "joinframes developers"

from joinframes.engine.engine import Engine

__all__ = ["Engine"]
