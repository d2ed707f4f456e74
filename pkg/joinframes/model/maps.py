"""偏序集映射与格映射

两类映射都只保存赋值表；单调、保并、嵌入等性质每次调用时重新计算。
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np

from joinframes.errors import InputError, OwnerMismatchError
from joinframes.model.lattice import FiniteLattice
from joinframes.model.poset import Poset, bits


def _check_total(size: int, cod_size: int, assignment: Sequence[int]) -> Tuple[int, ...]:
    values = tuple(int(v) for v in assignment)
    if len(values) != size:
        raise InputError(f"map assigns {len(values)} values, domain has {size} elements")
    for v in values:
        if not 0 <= v < cod_size:
            raise InputError(f"map value {v} is outside the codomain")
    return values


@dataclass(frozen=True)
class PosetMap:
    """偏序集之间的全函数"""

    dom: Poset
    cod: Poset
    assignment: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", _check_total(self.dom.n, self.cod.n, self.assignment))

    @classmethod
    def from_labels(cls, dom: Poset, cod: Poset, mapping: Mapping[str, str]) -> "PosetMap":
        missing = [label for label in dom.labels if label not in mapping]
        if missing:
            raise InputError(f"map is not total: no value for {', '.join(missing)}")
        extra = [label for label in mapping if label not in dom.index]
        if extra:
            raise InputError(f"map mentions unknown domain element {extra[0]}")
        return cls(dom, cod, tuple(cod.index_of(mapping[label]) for label in dom.labels))

    def __call__(self, p: int) -> int:
        return self.assignment[p]

    def image_mask(self, mask: int) -> int:
        result = 0
        for p in bits(mask):
            result |= 1 << self.assignment[p]
        return result

    def preimage_mask(self, mask: int) -> int:
        result = 0
        for p, value in enumerate(self.assignment):
            if mask >> value & 1:
                result |= 1 << p
        return result

    def _image_order(self) -> np.ndarray:
        values = np.array(self.assignment, dtype=np.int64)
        return self.cod.leq[np.ix_(values, values)]

    def is_monotone(self) -> bool:
        return bool(np.all(~self.dom.leq | self._image_order()))

    def is_embedding(self) -> bool:
        return bool(np.array_equal(self.dom.leq, self._image_order()))

    def preserves_joins_of(self, members: Iterable[int]) -> bool:
        """每个成员 S（掩码）的像 f[S] 的并存在且等于 f(⋁S)"""
        for S in members:
            source = self.dom.join_index(S)
            if source is None:
                return False
            if self.cod.join_index(self.image_mask(S)) != self.assignment[source]:
                return False
        return True

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def as_labels(self) -> Dict[str, str]:
        return {self.dom.labels[p]: self.cod.labels[v] for p, v in enumerate(self.assignment)}


def parse_assignment(text: str) -> Dict[str, str]:
    """解析 "a:d,b:d" 形式的映射"""
    mapping: Dict[str, str] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        source, sep, target = item.partition(":")
        if not sep or not source.strip() or not target.strip():
            raise InputError(f"malformed map entry '{item}', expected source:target")
        source = source.strip()
        if source in mapping:
            raise InputError(f"element '{source}' is mapped twice")
        mapping[source] = target.strip()
    return mapping


def identity_map(P: Poset) -> PosetMap:
    return PosetMap(P, P, tuple(range(P.n)))


def inclusion_map(P: Poset, mask: int) -> PosetMap:
    """诱导子偏序集 P|mask 到 P 的包含映射"""
    return PosetMap(P.subposet(mask), P, tuple(bits(mask)))


def compose(g: PosetMap, f: PosetMap) -> PosetMap:
    """g ∘ f"""
    if f.cod != g.dom:
        raise OwnerMismatchError("maps are not composable")
    return PosetMap(f.dom, g.cod, tuple(g.assignment[v] for v in f.assignment))


@dataclass(frozen=True)
class LatticeMap:
    """有限格之间的映射"""

    dom: FiniteLattice
    cod: FiniteLattice
    assignment: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", _check_total(self.dom.size, self.cod.size, self.assignment))

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    @property
    def _values(self) -> np.ndarray:
        return np.array(self.assignment, dtype=np.int64)

    def is_monotone(self) -> bool:
        a = self._values
        return bool(np.all(~self.dom.poset.leq | self.cod.poset.leq[np.ix_(a, a)]))

    def is_order_embedding(self) -> bool:
        a = self._values
        return bool(np.array_equal(self.dom.poset.leq, self.cod.poset.leq[np.ix_(a, a)]))

    def preserves_binary_joins(self) -> bool:
        a = self._values
        return bool(np.array_equal(a[self.dom.join_table], self.cod.join_table[np.ix_(a, a)]))

    def preserves_binary_meets(self) -> bool:
        a = self._values
        return bool(np.array_equal(a[self.dom.meet_table], self.cod.meet_table[np.ix_(a, a)]))

    def preserves_joins(self) -> bool:
        """保持全部并（有限格中即二元并加底元）"""
        return self.assignment[self.dom.bottom] == self.cod.bottom and self.preserves_binary_joins()

    def preserves_meets(self) -> bool:
        return self.assignment[self.dom.top] == self.cod.top and self.preserves_binary_meets()

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == self.cod.size

    def fixes(self, eta_dom: Sequence[int], eta_cod: Sequence[int]) -> bool:
        """与两侧的规范嵌入交换：f(η(p)) = η'(p)"""
        return all(self.assignment[x] == y for x, y in zip(eta_dom, eta_cod))

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """self ∘ other"""
        if other.cod is not self.dom:
            raise OwnerMismatchError("lattice maps are not composable")
        return LatticeMap(other.dom, self.cod, tuple(self.assignment[v] for v in other.assignment))

    def flags(self) -> Dict[str, bool]:
        return {
            "monotone": self.is_monotone(),
            "join_preserving": self.preserves_joins(),
            "meet_preserving": self.preserves_meets(),
            "injective": self.is_injective(),
            "surjective": self.is_surjective(),
            "order_embedding": self.is_order_embedding(),
        }
