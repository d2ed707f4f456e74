"""U⁻：U 中最大的框架生成子规格"""

import concurrent.futures
import logging
from typing import List, Optional

from joinframes.spec.joinspec import JoinSpec

logger = logging.getLogger(__name__)


def is_problematic(U: JoinSpec, S: int) -> bool:
    """Υ_U(S) 不下闭"""
    return not U.owner.is_downclosed(U.upsilon_mask(S))


def problematic_masks(U: JoinSpec, max_workers: int = 1) -> List[int]:
    candidates = [S for S in U.masks if bin(S).count("1") >= 2]
    if max_workers <= 1 or len(candidates) < 2:
        flags = [is_problematic(U, S) for S in candidates]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
            flags = list(executor.map(lambda S: is_problematic(U, S), candidates))
    return [S for S, bad in zip(candidates, flags) if bad]


def uminus(U: JoinSpec, max_workers: int = 1) -> JoinSpec:
    """每轮同时去掉全部有问题的成员，针对缩小后的规格重新计算，直到没有

    单点集与 ∅ 从不会有问题，所以总被保留；至多 |U| 轮。
    """
    current = U
    rounds = 0
    while True:
        bad = problematic_masks(current, max_workers)
        if not bad:
            break
        rounds += 1
        logger.debug(
            f"pruning round {rounds}: removing "
            + " ".join(current.owner.format_mask(S) for S in bad)
        )
        current = current.without(bad)
    logger.debug(f"U⁻ reached after {rounds} rounds")
    return current.renamed(f"{U.name}-" if U.name else None)


def uminus_sequential(U: JoinSpec) -> JoinSpec:
    """每次只去掉规范顺序中第一个有问题的成员"""
    current = U
    while True:
        bad = next(
            (S for S in current.masks if bin(S).count("1") >= 2 and is_problematic(current, S)),
            None,
        )
        if bad is None:
            return current.renamed(f"{U.name}-" if U.name else None)
        current = current.without([bad])


def removal_recheck(U: JoinSpec, pruned: Optional[JoinSpec] = None) -> List[int]:
    """被去掉的成员中，重新加回 U⁻ 后不再有问题的那些

    用来收集同时删除与逐个删除之间差异的数据。
    """
    pruned = pruned if pruned is not None else uminus(U)
    removed = [S for S in U.masks if S not in pruned.mask_set]
    return [S for S in removed if not is_problematic(pruned.with_members([S]), S)]
