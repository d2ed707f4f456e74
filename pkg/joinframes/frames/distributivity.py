"""有限格的分配律、模律与 Birkhoff 表示检查"""

import logging
from itertools import combinations, product
from math import comb
from typing import Optional, Tuple, Union

import numpy as np

from joinframes.config import check_cap, get_limits
from joinframes.errors import PreconditionError
from joinframes.model.lattice import FiniteLattice
from joinframes.model.poset import ElemSet, Poset, bits, downset_masks, mask_of_indices

logger = logging.getLogger(__name__)

LatticeLike = Union[FiniteLattice, Poset]


def as_lattice(L: LatticeLike) -> FiniteLattice:
    if isinstance(L, FiniteLattice):
        return L
    return FiniteLattice.from_poset(L)


def _check_triples(L: FiniteLattice) -> None:
    check_cap("lattice triples", L.size ** 3, get_limits().max_triples)


def distributivity_witness(L: LatticeLike) -> Optional[Tuple[int, int, int]]:
    """返回使 x∧(y∨z) ≠ (x∧y)∨(x∧z) 的第一个三元组，没有则返回 None"""
    L = as_lattice(L)
    _check_triples(L)
    J, M = L.join_table, L.meet_table
    for x in range(L.size):
        row = M[x]
        lhs = row[J]
        rhs = J[np.ix_(row, row)]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            y, z = bad[0]
            return x, int(y), int(z)
    return None


def is_distributive(L: LatticeLike) -> bool:
    return distributivity_witness(L) is None


def is_frame(L: LatticeLike) -> bool:
    """有限格是框架当且仅当它分配"""
    return is_distributive(L)


def modularity_witness(L: LatticeLike) -> Optional[Tuple[int, int, int]]:
    """返回 x ≤ z 且 x∨(y∧z) ≠ (x∨y)∧z 的第一个三元组 (x, y, z)，没有则返回 None"""
    L = as_lattice(L)
    _check_triples(L)
    J, M = L.join_table, L.meet_table
    leq = L.poset.leq
    for x in range(L.size):
        lhs = J[x][M]
        rhs = M[J[x]]
        bad = np.argwhere(leq[x][None, :] & (lhs != rhs))
        if len(bad):
            y, z = bad[0]
            return x, int(y), int(z)
    return None


def is_modular(L: LatticeLike) -> bool:
    return modularity_witness(L) is None


def find_pentagon(L: LatticeLike) -> Optional[Tuple[int, int, int, int, int]]:
    """寻找 N5 子格 (a∧c, a, b, c, b∨c)，其中 a < b 且 a∨c = b∨c、a∧c = b∧c

    格不是模格当且仅当含 N5。由模律的反例 (x, y, z) 取
    a = x∨(y∧z)、b = (x∨y)∧z、c = y。
    """
    L = as_lattice(L)
    witness = modularity_witness(L)
    if witness is None:
        return None
    x, y, z = witness
    a = L.join(x, L.meet(y, z))
    b = L.meet(L.join(x, y), z)
    return L.meet(a, y), a, b, y, L.join(b, y)


def join_irreducibles(L: LatticeLike) -> ElemSet:
    """不是其严格下方元素之并的元素（底元除外）"""
    L = as_lattice(L)
    mask = 0
    for x in range(L.size):
        if x == L.bottom:
            continue
        below = L.poset.down_masks[x] & ~(1 << x)
        if L.join_all(bits(below)) != x:
            mask |= 1 << x
    return ElemSet(L.poset, mask)


def birkhoff_check(L: LatticeLike) -> bool:
    """验证 L ≅ A(J(L))，同构为 x ↦ {j ∈ J(L) : j ≤ x}

    Raises:
        PreconditionError: L 不分配
    """
    L = as_lattice(L)
    if not is_distributive(L):
        raise PreconditionError("Birkhoff representation needs a distributive lattice")
    irreducible = join_irreducibles(L).mask
    jposet = L.poset.subposet(irreducible)
    position = {x: k for k, x in enumerate(bits(irreducible))}
    image = []
    for x in range(L.size):
        below = L.poset.down_masks[x] & irreducible
        image.append(mask_of_indices(position[j] for j in bits(below)))
    downsets = set(downset_masks(jposet))
    if set(image) != downsets or len(set(image)) != L.size:
        return False
    for x in range(L.size):
        for y in range(L.size):
            if L.leq(x, y) != (image[x] & ~image[y] == 0):
                return False
    return True


def distributivity_mk(L: LatticeLike, m: int, k: int, cap: Optional[int] = None) -> bool:
    """有界 (m,k)-分配律检查

    枚举 |I| < m 个内层集合 X_i（|X_i| < k），若 ⋀_I ⋁X_i 存在且每个选择函数的交
    都存在，则要求 ⋁_f ⋀_I x_f(i) 存在且相等。重复的元素不改变并与交，因此
    内层集合与外层族都按集合枚举。L 可以是任意偏序集（部分并/交）。
    """
    if m < 2 or k < 2:
        raise PreconditionError("distributivity bounds must be at least 2")
    P = L.poset if isinstance(L, FiniteLattice) else L
    if cap is None:
        cap = get_limits().max_tuples
    inner = [
        mask_of_indices(c)
        for size in range(1, k)
        for c in combinations(range(P.n), size)
    ]
    families = sum(comb(len(inner), r) for r in range(1, m))
    check_cap(f"({m},{k})-distributivity families", families, cap)

    for r in range(1, m):
        for family in combinations(inner, r):
            joins = [P.join_index(x) for x in family]
            if any(j is None for j in joins):
                continue
            lhs = P.meet_index(mask_of_indices(joins))
            if lhs is None:
                continue
            meets = 0
            defined = True
            for choice in product(*(list(bits(x)) for x in family)):
                value = P.meet_index(mask_of_indices(choice))
                if value is None:
                    defined = False
                    break
                meets |= 1 << value
            if not defined:
                continue
            if P.join_index(meets) != lhs:
                logger.debug(f"({m},{k})-distributivity fails on {[P.format_mask(x) for x in family]}")
                return False
    return True

