"""枚举上限配置"""

import logging
from dataclasses import dataclass, replace

from joinframes.errors import CapExceededError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    """指数级操作的上限"""

    max_n: int = 24
    max_downsets: int = 2 ** 20
    max_ideals: int = 2 ** 20
    max_subsets: int = 2 ** 20
    max_tuples: int = 200_000
    # 格的二元表项数 m² 与逐行三元组检查 m³
    max_table_entries: int = 2 ** 22
    max_triples: int = 2 ** 27

    def __post_init__(self):
        for name in (
            "max_n", "max_downsets", "max_ideals", "max_subsets", "max_tuples", "max_table_entries", "max_triples",
        ):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive, got {getattr(self, name)}")

    def with_overrides(self, **overrides) -> "Limits":
        """返回覆盖部分字段后的新上限，忽略值为 None 的项"""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values)


_limits = Limits()


def get_limits() -> Limits:
    return _limits


def set_limits(limits: Limits) -> None:
    global _limits
    _limits = limits


def check_cap(what: str, needed: int, cap: int) -> None:
    """needed 超过 cap 时记录警告并抛出 CapExceededError"""
    if needed > cap:
        logger.warning(f"{what}: {needed} exceeds cap {cap}")
        raise CapExceededError(what, cap, needed)
