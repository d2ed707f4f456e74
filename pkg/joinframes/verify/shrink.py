"""失败实例的贪心收缩

先逐个去掉两个规格中的非单点成员，再逐个去掉偏序集元素，只要失败仍然存在
就保留这次删除；重复直到没有删除能保持失败。结果不一定最小。
"""

import logging
from typing import Callable, List, Optional

from joinframes.errors import CapExceededError, JoinFramesError
from joinframes.spec.joinspec import restrict_spec
from joinframes.verify.laws import Law, LawInstance, LawSkipped

logger = logging.getLogger(__name__)


def law_failure(law: Law, inst: LawInstance) -> Optional[str]:
    """运行一条定律，返回失败信息；跳过或成立时返回 None"""
    try:
        return law.check(inst)
    except (LawSkipped, CapExceededError):
        return None
    except JoinFramesError as e:
        return f"{type(e).__name__}: {e}"


def remove_element(inst: LawInstance, x: int) -> Optional[LawInstance]:
    """去掉元素 x，成员中含 x 或在子偏序集中失去并的集合一并去掉"""
    P = inst.P
    if P.n <= 1:
        return None
    keep = [i for i in range(P.n) if i != x]
    sub = P.subposet(P.full_mask & ~(1 << x))
    return LawInstance(inst.index, sub, restrict_spec(inst.U, sub, keep), restrict_spec(inst.V, sub, keep))


def _member_candidates(inst: LawInstance) -> List[Callable[[], LawInstance]]:
    candidates = []
    for S in inst.U.nontrivial_masks():
        candidates.append(lambda S=S: LawInstance(inst.index, inst.P, inst.U.without([S]), inst.V))
    for S in inst.V.nontrivial_masks():
        candidates.append(lambda S=S: LawInstance(inst.index, inst.P, inst.U, inst.V.without([S])))
    return candidates


def shrink_failure(law: Law, inst: LawInstance, max_steps: int = 200) -> LawInstance:
    """贪心收缩仍然违反 law 的实例

    Args:
        law: 失败的定律
        inst: 失败实例
        max_steps: 成功删除次数的上限

    Returns:
        LawInstance: 收缩后的实例（仍然失败）
    """
    current = inst
    steps = 0
    progress = True
    while progress and steps < max_steps:
        progress = False
        for build in _member_candidates(current):
            candidate = build()
            if law_failure(law, candidate) is not None:
                current = candidate
                steps += 1
                progress = True
                break
        if progress:
            continue
        for x in reversed(range(current.P.n)):
            candidate = remove_element(current, x)
            if candidate is not None and law_failure(law, candidate) is not None:
                current = candidate
                steps += 1
                progress = True
                break
    logger.debug(f"shrunk failure of {law.name} in {steps} steps to {current.P.n} elements")
    return current
