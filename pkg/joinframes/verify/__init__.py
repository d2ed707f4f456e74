"""随机化定律验证模块

SplitMix64 伪随机数、随机与穷举实例生成、按套件分组的定律、失败收缩与验证器。
"""

from joinframes.verify.generators import (
    SplitMix64,
    exhaustive_posets,
    joinable_masks,
    random_joinspec,
    random_poset,
)
from joinframes.verify.harness import VerificationHarness, VerifyConfig, verify_theorems
from joinframes.verify.laws import LAWS, SUITES, Law, LawInstance, LawSkipped, select_laws
from joinframes.verify.shrink import law_failure, shrink_failure

__all__ = [
    "SplitMix64",
    "random_poset",
    "random_joinspec",
    "joinable_masks",
    "exhaustive_posets",
    "VerifyConfig",
    "VerificationHarness",
    "verify_theorems",
    "LAWS",
    "SUITES",
    "Law",
    "LawInstance",
    "LawSkipped",
    "select_laws",
    "law_failure",
    "shrink_failure",
]
