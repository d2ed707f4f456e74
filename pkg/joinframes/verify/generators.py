"""可复现的随机实例生成

SplitMix64 是公开的 64 位生成器，给定种子在任何实现中产生同一序列：
    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    输出 z ^ (z >> 31)            （全部按 2^64 取模）
有界抽样用拒绝采样，伯努利抽样用精确有理数比较。
"""

import string
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, List, Optional

import numpy as np

from joinframes.errors import InputError
from joinframes.model.poset import Poset, build_poset, canonical_key, popcount, transitive_closure
from joinframes.spec.joinspec import JoinSpec

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 伪随机数生成器"""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """[0, bound) 上的均匀整数"""
        if bound < 1:
            raise InputError(f"bound must be positive, got {bound}")
        limit = ((1 << 64) // bound) * bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def bernoulli(self, p: Fraction) -> bool:
        """以精确概率 p 返回 True；总是恰好消耗一次有界抽样"""
        p = Fraction(p)
        if not 0 <= p <= 1:
            raise InputError(f"probability {p} is outside [0, 1]")
        return self.below(p.denominator) < p.numerator


def element_labels(n: int) -> List[str]:
    letters = string.ascii_lowercase
    return [letters[i] if i < len(letters) else f"x{i}" for i in range(n)]


def random_poset(rng: SplitMix64, n: int, edge_prob: Fraction) -> Poset:
    """在 n 个点上按 (i, j)，i < j 的字典序逐对抽边，取传递闭包"""
    labels = element_labels(n)
    covers = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.bernoulli(edge_prob)
    ]
    return build_poset(labels, covers)


def joinable_masks(P: Poset) -> List[int]:
    """并存在、至少两个元素的子集，规范顺序"""
    return sorted(
        (m for m in range(1 << P.n) if popcount(m) >= 2 and P.join_index(m) is not None),
        key=canonical_key,
    )


def random_joinspec(rng: SplitMix64, P: Poset, members: int, name: Optional[str] = None) -> JoinSpec:
    """B_P 加上从 joinable_masks(P) 中无放回抽取的 members 个集合（部分 Fisher-Yates）"""
    pool = joinable_masks(P)
    k = min(members, len(pool))
    for i in range(k):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return JoinSpec(P, pool[:k], name)


def _canonical_form(leq: np.ndarray) -> bytes:
    n = leq.shape[0]
    return min(leq[np.ix_(perm, perm)].tobytes() for perm in map(list, permutations(range(n))))


def exhaustive_posets(n: int) -> Iterator[Poset]:
    """n 个元素上同构意义下的全部偏序集

    每个偏序集都有与下标顺序相容的线性扩张，所以只需枚举 i < j 的关系子集，
    再按全部置换下的最小序矩阵去重。
    """
    if n < 1:
        raise InputError("exhaustive enumeration needs n >= 1")
    if n > 5:
        raise InputError(f"exhaustive enumeration is limited to n <= 5, got {n}")
    labels = element_labels(n)
    pairs = list(combinations(range(n), 2))
    seen = set()
    for choice in range(1 << len(pairs)):
        relation = np.zeros((n, n), dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                relation[i, j] = True
        leq = transitive_closure(relation)
        form = _canonical_form(leq)
        if form in seen:
            continue
        seen.add(form)
        yield Poset(labels, leq)
