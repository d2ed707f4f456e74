"""有限格模块

FiniteLattice 包装一个是格的偏序集，预先计算二元并/交表（numpy 整数矩阵）。
ClosedSetLattice 是按包含序排列的闭集族，并由闭包算子给出，交由交集给出；
它的表按需计算，覆盖关系直接由单点扩张的闭包得到。
"""

import logging
from functools import cached_property, reduce
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from joinframes.config import check_cap, get_limits
from joinframes.errors import NotALatticeError
from joinframes.model.poset import ElemSet, Poset, bits, canonical_key

logger = logging.getLogger(__name__)

# 更宽的掩码放不进 int64，改用 Python 整数的对象数组
INT64_MASK_BITS = 62


def _bound_table(leq: np.ndarray, upper: bool) -> np.ndarray:
    """二元最小上界（upper=True）或最大下界表

    rel[a, x] 表示 x 是 a 的一个界。a、b 的公共界中，界本身拥有最多界的
    那个就是候选最小（最大）界，再验证它在所有公共界之下（之上）。
    """
    rel = leq if upper else leq.T
    m = rel.shape[0]
    count = rel.sum(axis=1)
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        common = rel[a][None, :] & rel
        if not common.any(axis=1).all():
            raise NotALatticeError("some pair has no common bound")
        best = np.where(common, count[None, :], -1).argmax(axis=1)
        if (common & ~rel[best]).any():
            kind = "join" if upper else "meet"
            raise NotALatticeError(f"some pair has no {kind}")
        table[a] = best
    table.setflags(write=False)
    return table


class FiniteLattice:
    """有限格

    Args:
        poset: 底层偏序集
        join_table: 预先计算的并表，省略时由序关系推出
        meet_table: 预先计算的交表
    """

    # 构造时就计算并校验两张表
    eager_tables = True

    def __init__(self, poset: Poset, join_table: Optional[np.ndarray] = None,
                 meet_table: Optional[np.ndarray] = None):
        if poset.n == 0:
            raise NotALatticeError("the empty poset is not a lattice")
        check_cap("lattice table entries", poset.n * poset.n, get_limits().max_table_entries)
        self.poset = poset
        self.size = poset.n
        if join_table is not None:
            self.join_table = join_table
        if meet_table is not None:
            self.meet_table = meet_table
        self.bottom = poset.bottom
        self.top = poset.top
        if self.bottom is None or self.top is None:
            raise NotALatticeError("a finite lattice needs a bottom and a top")
        if self.eager_tables:
            # 不是格时在这里抛出 NotALatticeError
            _ = self.join_table, self.meet_table

    @classmethod
    def from_poset(cls, poset: Poset) -> "FiniteLattice":
        return cls(poset)

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size})"

    @cached_property
    def join_table(self) -> np.ndarray:
        return _bound_table(self.poset.leq, True)

    @cached_property
    def meet_table(self) -> np.ndarray:
        return _bound_table(self.poset.leq, False)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.poset.leq[x, y])

    def join(self, x: int, y: int) -> int:
        return int(self.join_table[x, y])

    def meet(self, x: int, y: int) -> int:
        return int(self.meet_table[x, y])

    def join_all(self, elements: Iterable[int]) -> int:
        result = self.bottom
        for x in elements:
            result = int(self.join_table[result, x])
        return result

    def meet_all(self, elements: Iterable[int]) -> int:
        result = self.top
        for x in elements:
            result = int(self.meet_table[result, x])
        return result

    def label(self, x: int) -> str:
        return self.poset.labels[x]


class ClosedSetLattice(FiniteLattice):
    """按包含序排列的闭集格

    序矩阵由掩码数组按位运算一次算出；交表查交集、并表查并集，只有并集
    本身不闭的对才调用闭包。覆盖关系取每个闭集 C 的单点扩张 Γ(C ∪ {p})
    中的极小者，不做 m×m 的传递约简。

    Args:
        owner: 闭集所在的偏序集
        masks: 闭集族（须对交封闭且含全集）
        closure: 闭包算子，作用在掩码上
        name: 可选名称

    Raises:
        CapExceededError: 闭集个数的平方超过 max_table_entries
    """

    eager_tables = False

    def __init__(self, owner: Poset, masks: Iterable[int],
                 closure: Callable[[int], int], name: Optional[str] = None):
        self.owner = owner
        self.name = name
        self.closure = closure
        self.sets = tuple(sorted(set(masks), key=canonical_key))
        self.index: Dict[int, int] = {mask: i for i, mask in enumerate(self.sets)}
        m = len(self.sets)
        if owner.full_mask not in self.index:
            raise NotALatticeError("closed-set family must contain the whole carrier")
        check_cap("lattice table entries", m * m, get_limits().max_table_entries)

        dtype = np.int64 if owner.n <= INT64_MASK_BITS else object
        self._array = np.array(self.sets, dtype=dtype)
        self._order = np.argsort(self._array, kind="stable")
        self._sorted = self._array[self._order]
        leq = (self._array[:, None] & ~self._array[None, :]) == 0
        poset = Poset([f"c{i}" for i in range(m)], leq, covers=self._covers())
        super().__init__(poset)
        logger.debug(f"closed-set lattice with {m} members over {owner.n} elements")

    def _lookup(self, values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """掩码数组到闭集下标；返回 (下标, 是否为闭集)，非闭集处的下标无意义"""
        pos = np.minimum(np.searchsorted(self._sorted, values), len(self.sets) - 1)
        found = self._sorted[pos] == values
        return self._order[pos], found.astype(bool)

    def _covers(self) -> List[Tuple[int, int]]:
        full = self.owner.full_mask
        pairs = []
        for x, a in enumerate(self.sets):
            candidates = {self.closure(a | (1 << p)) for p in bits(full & ~a)}
            for c in candidates:
                if not any(d != c and d & ~c == 0 for d in candidates):
                    pairs.append((x, self.index_of(c)))
        return pairs

    @cached_property
    def meet_table(self) -> np.ndarray:
        table, found = self._lookup(self._array[:, None] & self._array[None, :])
        if not found.all():
            x, y = np.argwhere(~found)[0]
            raise NotALatticeError(
                f"family is not closed for {self.owner.format_mask(self.sets[x])} "
                f"and {self.owner.format_mask(self.sets[y])}"
            )
        table = table.astype(np.int64)
        table.setflags(write=False)
        return table

    @cached_property
    def join_table(self) -> np.ndarray:
        unions = self._array[:, None] | self._array[None, :]
        table, found = self._lookup(unions)
        table = table.astype(np.int64)
        missing = ~found
        if missing.any():
            values, inverse = np.unique(unions[missing], return_inverse=True)
            closed = np.array([self.index_of(self.closure(int(v))) for v in values], dtype=np.int64)
            table[missing] = closed[inverse]
        table.setflags(write=False)
        return table

    def join(self, x: int, y: int) -> int:
        return self.index_of(self.closure(self.sets[x] | self.sets[y]))

    def meet(self, x: int, y: int) -> int:
        return self.index_of(self.sets[x] & self.sets[y])

    def join_all(self, elements: Iterable[int]) -> int:
        union = reduce(lambda acc, x: acc | self.sets[x], elements, 0)
        return self.index_of(self.closure(union))

    def meet_all(self, elements: Iterable[int]) -> int:
        return self.index_of(reduce(lambda acc, x: acc & self.sets[x], elements, self.owner.full_mask))

    def set_of(self, x: int) -> ElemSet:
        return ElemSet(self.owner, self.sets[x])

    def index_of(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise NotALatticeError(f"{self.owner.format_mask(mask)} is not a closed set") from None

    def eta(self, p: int) -> int:
        """主理想 p↓ 在格中的下标"""
        return self.index_of(self.owner.down_masks[p])

    def eta_table(self) -> Sequence[int]:
        return tuple(self.eta(p) for p in range(self.owner.n))

    def label(self, x: int) -> str:
        return self.owner.format_mask(self.sets[x])

    def members(self):
        return [ElemSet(self.owner, mask) for mask in self.sets]


def lattice_of_closed_sets(owner: Poset, masks: Iterable[int], name: Optional[str] = None) -> ClosedSetLattice:
    """由对交封闭的集族构造格，闭包取包含它的最小成员"""
    family = tuple(set(masks))

    def smallest_member(mask: int) -> int:
        result = owner.full_mask
        for member in family:
            if mask & ~member == 0:
                result &= member
        return result

    return ClosedSetLattice(owner, family, smallest_member, name)
