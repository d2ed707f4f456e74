"""有限偏序集模块

元素用 0..n-1 的稠密下标表示，子集用整数位掩码表示（第 i 位对应元素 i）。
序关系同时保存为只读的 numpy 布尔矩阵 leq（leq[i, j] 表示 i <= j）。
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from joinframes.config import check_cap, get_limits
from joinframes.errors import OwnerMismatchError, PosetError

logger = logging.getLogger(__name__)

LABEL_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def bits(mask: int) -> Iterator[int]:
    """按升序迭代掩码中的下标"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def canonical_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """集合的规范排序键：先按基数，再按排序后的下标"""
    return popcount(mask), tuple(bits(mask))


def row_masks(matrix: np.ndarray) -> Tuple[int, ...]:
    """布尔矩阵每一行对应的位掩码"""
    packed = np.packbits(np.asarray(matrix, dtype=bool), axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


def transitive_closure(relation: np.ndarray) -> np.ndarray:
    """布尔关系的自反传递闭包（反复平方直到稳定）"""
    n = relation.shape[0]
    closure = relation.astype(bool) | np.eye(n, dtype=bool)
    while True:
        step = (closure.astype(np.int32) @ closure.astype(np.int32)) > 0
        if np.array_equal(step, closure):
            return closure
        closure = step


def transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """严格序去掉可经中间元素到达的对，得到覆盖关系"""
    n = leq.shape[0]
    lt = leq & ~np.eye(n, dtype=bool)
    two_step = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
    return lt & ~two_step


class Poset:
    """有限偏序集

    构造后不可变；所有操作都是纯函数，可以在线程间共享。
    一般通过 build_poset 或 Poset.from_leq 构造。
    """

    def __init__(self, labels: Sequence[str], leq: np.ndarray,
                 covers: Optional[Iterable[Tuple[int, int]]] = None):
        self.labels: Tuple[str, ...] = tuple(labels)
        self.n = len(self.labels)
        self.index: Dict[str, int] = {label: i for i, label in enumerate(self.labels)}
        matrix = np.array(leq, dtype=bool)
        matrix.setflags(write=False)
        self.leq = matrix
        self.full_mask = (1 << self.n) - 1
        self.down_masks: Tuple[int, ...] = row_masks(matrix.T)
        self.up_masks: Tuple[int, ...] = row_masks(matrix)
        self.bottom: Optional[int] = next(
            (i for i in range(self.n) if self.up_masks[i] == self.full_mask), None
        )
        self.top: Optional[int] = next(
            (i for i in range(self.n) if self.down_masks[i] == self.full_mask), None
        )
        if covers is not None:
            # 调用方已知覆盖关系时不再做传递约简
            self.covers = tuple(sorted(covers))

    @classmethod
    def from_leq(cls, labels: Sequence[str], leq: np.ndarray) -> "Poset":
        """从完整的序矩阵构造，并校验自反、反对称、传递"""
        _check_labels(labels)
        matrix = np.array(leq, dtype=bool)
        n = len(labels)
        if matrix.shape != (n, n):
            raise PosetError(f"order matrix has shape {matrix.shape}, expected {(n, n)}")
        if not matrix.diagonal().all():
            raise PosetError("order relation is not reflexive")
        if ((matrix & matrix.T) != np.eye(n, dtype=bool)).any():
            raise PosetError("order relation is not antisymmetric")
        if not np.array_equal(transitive_closure(matrix), matrix):
            raise PosetError("order relation is not transitive")
        return cls(labels, matrix)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.labels, self.leq.tobytes()))

    def __repr__(self):
        return f"Poset(n={self.n}, labels={list(self.labels)})"

    def __len__(self):
        return self.n

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self.leq[i, j])

    # 元素与集合的转换

    def index_of(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise PosetError(f"unknown element '{label}'") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        return mask_of_indices(self.index_of(label) for label in labels)

    def labels_of(self, mask: int) -> List[str]:
        return [self.labels[i] for i in bits(mask)]

    def elemset(self, members: Union[int, Iterable[str]]) -> "ElemSet":
        """由掩码或标签序列构造 ElemSet"""
        if isinstance(members, int):
            if members & ~self.full_mask:
                raise PosetError(f"mask {members:#x} has bits outside the carrier")
            return ElemSet(self, members)
        return ElemSet(self, self.mask_of(members))

    def format_mask(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"

    # 闭包与界

    def downclose_mask(self, mask: int) -> int:
        result = 0
        for i in bits(mask):
            result |= self.down_masks[i]
        return result

    def upclose_mask(self, mask: int) -> int:
        result = 0
        for i in bits(mask):
            result |= self.up_masks[i]
        return result

    def is_downclosed(self, mask: int) -> bool:
        return self.downclose_mask(mask) == mask

    def upper_bounds_mask(self, mask: int) -> int:
        result = self.full_mask
        for i in bits(mask):
            result &= self.up_masks[i]
        return result

    def lower_bounds_mask(self, mask: int) -> int:
        result = self.full_mask
        for i in bits(mask):
            result &= self.down_masks[i]
        return result

    def join_index(self, mask: int) -> Optional[int]:
        """掩码的最小上界下标；不存在时返回 None（空集的并是底元）"""
        upper = self.upper_bounds_mask(mask)
        for u in bits(upper):
            if upper & ~self.up_masks[u] == 0:
                return u
        return None

    def meet_index(self, mask: int) -> Optional[int]:
        lower = self.lower_bounds_mask(mask)
        for v in bits(lower):
            if lower & ~self.down_masks[v] == 0:
                return v
        return None

    def max_index(self, mask: int) -> Optional[int]:
        """mask 中的最大元；没有时返回 None"""
        for i in bits(mask):
            if mask & ~self.down_masks[i] == 0:
                return i
        return None

    # 派生结构

    @cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """覆盖关系（传递约简），按 (下, 上) 排序"""
        reduction = transitive_reduction(self.leq)
        return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(reduction)))

    @cached_property
    def linear_extension(self) -> Tuple[int, ...]:
        # 严格下方元素个数是一个线性扩张的排序键
        return tuple(sorted(range(self.n), key=lambda i: (popcount(self.down_masks[i]), i)))

    def subposet(self, mask: int) -> "Poset":
        """诱导子偏序集，保留原来的标签顺序"""
        keep = list(bits(mask))
        return Poset(
            [self.labels[i] for i in keep], self.leq[np.ix_(keep, keep)]
        )

    def is_lattice(self) -> bool:
        if self.n == 0:
            return False
        for i in range(self.n):
            for j in range(i + 1, self.n):
                pair = (1 << i) | (1 << j)
                if self.join_index(pair) is None or self.meet_index(pair) is None:
                    return False
        return True


@dataclass(frozen=True)
class ElemSet:
    """偏序集载体的子集"""

    owner: Poset
    mask: int

    def _check(self, other: "ElemSet") -> None:
        if other.owner is not self.owner and other.owner != self.owner:
            raise OwnerMismatchError("set operation between sets of different posets")

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def labels(self) -> List[str]:
        return self.owner.labels_of(self.mask)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            index = self.owner.index.get(item)
            return index is not None and bool(self.mask >> index & 1)
        return bool(self.mask >> item & 1)

    def __or__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.owner, self.mask | other.mask)

    def __and__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.owner, self.mask & other.mask)

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.owner, self.mask & ~other.mask)

    def __le__(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def sort_key(self):
        return canonical_key(self.mask)

    def __str__(self):
        return self.owner.format_mask(self.mask)


def _check_labels(labels: Sequence[str]) -> None:
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not LABEL_PATTERN.match(label):
            raise PosetError(f"invalid element label {label!r}")
        if label in seen:
            raise PosetError(f"duplicate element label '{label}'")
        seen.add(label)


def _find_cycle(n: int, succ: List[List[int]]) -> Optional[List[int]]:
    """深度优先搜索覆盖图，返回一个环（首尾相同）或 None"""
    color = [0] * n
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            node, children = stack[-1]
            advanced = False
            for child in children:
                if color[child] == 1:
                    cycle = [child]
                    cur = node
                    while cur != child:
                        cycle.append(cur)
                        cur = parent[cur]
                    cycle.append(child)
                    return cycle[::-1]
                if color[child] == 0:
                    color[child] = 1
                    parent[child] = node
                    stack.append((child, iter(succ[child])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                stack.pop()
    return None


def build_poset(labels: Sequence[str], covers: Iterable[Tuple[str, str]]) -> Poset:
    """由标签和覆盖对 (下, 上) 构造偏序集

    Args:
        labels: 互不相同的标识符
        covers: 覆盖对，允许冗余（可由传递性推出的对）

    Returns:
        Poset: leq 为覆盖关系的自反传递闭包

    Raises:
        PosetError: 重复标签、未知标签或存在环
    """
    labels = list(labels)
    _check_labels(labels)
    n = len(labels)
    limits = get_limits()
    if n == 0:
        raise PosetError("a poset needs at least one element")
    check_cap("poset size", n, limits.max_n)

    index = {label: i for i, label in enumerate(labels)}
    succ: List[List[int]] = [[] for _ in range(n)]
    relation = np.zeros((n, n), dtype=bool)
    for lower, upper in covers:
        for label in (lower, upper):
            if label not in index:
                raise PosetError(f"unknown element '{label}' in cover {lower} < {upper}")
        i, j = index[lower], index[upper]
        succ[i].append(j)
        relation[i, j] = True

    cycle = _find_cycle(n, succ)
    if cycle is not None:
        path = " < ".join(labels[i] for i in cycle)
        raise PosetError(f"cycle detected: {path}")

    return Poset(labels, transitive_closure(relation))


def _owned(P: Poset, S: ElemSet) -> int:
    if S.owner is not P and S.owner != P:
        raise OwnerMismatchError("set does not belong to this poset")
    return S.mask


def downclose(P: Poset, S: ElemSet) -> ElemSet:
    return ElemSet(P, P.downclose_mask(_owned(P, S)))


def upclose(P: Poset, S: ElemSet) -> ElemSet:
    return ElemSet(P, P.upclose_mask(_owned(P, S)))


def join(P: Poset, S: ElemSet) -> Optional[str]:
    """S 的并（最小上界）的标签，不存在时返回 None"""
    index = P.join_index(_owned(P, S))
    return None if index is None else P.labels[index]


def meet(P: Poset, S: ElemSet) -> Optional[str]:
    index = P.meet_index(_owned(P, S))
    return None if index is None else P.labels[index]


def downset_masks(P: Poset, cap: Optional[int] = None) -> List[int]:
    """按线性扩张逐个决定元素是否加入，枚举全部下集掩码"""
    if cap is None:
        cap = get_limits().max_downsets
    results = [0]
    for x in P.linear_extension:
        below = P.down_masks[x] & ~(1 << x)
        bit = 1 << x
        results.extend([m | bit for m in results if m & below == below])
        check_cap("downset enumeration", len(results), cap)
    return results


def all_downsets(P: Poset, cap: Optional[int] = None) -> List[ElemSet]:
    """P 的全部下集，按规范顺序排列，包含空集和 P 本身"""
    masks = sorted(downset_masks(P, cap), key=canonical_key)
    logger.debug(f"{len(masks)} downsets for poset of size {P.n}")
    return [ElemSet(P, m) for m in masks]
