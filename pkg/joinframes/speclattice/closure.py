"""标准闭包算子的表示，以及闭包与连接完备化之间的往返

ClosureRepr 或者由连接规格支撑（Γ = Γ_U），或者由显式闭集族支撑
（Γ(S) 为包含 S 的最小成员）。
"""

import logging
from typing import Iterable, List, Optional, Sequence

from joinframes.config import check_cap, get_limits
from joinframes.errors import InvariantViolation, PreconditionError
from joinframes.frames.distributivity import is_distributive
from joinframes.frames.ideals import ideal_lattice, ideal_masks
from joinframes.model.lattice import ClosedSetLattice, FiniteLattice, lattice_of_closed_sets
from joinframes.model.maps import LatticeMap, PosetMap
from joinframes.model.poset import Poset, canonical_key
from joinframes.spec.joinspec import JoinSpec, bp

logger = logging.getLogger(__name__)


class ClosureRepr:
    """P 上的标准闭包算子"""

    def __init__(self, owner: Poset, spec: Optional[JoinSpec] = None,
                 family: Optional[Iterable[int]] = None, name: Optional[str] = None):
        if (spec is None) == (family is None):
            raise PreconditionError("a closure is backed by exactly one of a spec or a family")
        self.owner = owner
        self.spec = spec
        self.name = name or (spec.name if spec is not None else None)
        self._lattice: Optional[ClosedSetLattice] = None
        if family is not None:
            self.family = tuple(sorted(set(family), key=canonical_key))
            self._validate_family()
        else:
            self.family = None

    @classmethod
    def from_spec(cls, U: JoinSpec) -> "ClosureRepr":
        return cls(U.owner, spec=U)

    @classmethod
    def from_family(cls, owner: Poset, masks: Iterable[int], name: Optional[str] = None) -> "ClosureRepr":
        return cls(owner, family=masks, name=name)

    def _validate_family(self) -> None:
        owner = self.owner
        members = set(self.family)
        if owner.full_mask not in members:
            raise PreconditionError("closed-set family must contain the whole poset")
        for p in range(owner.n):
            if owner.down_masks[p] not in members:
                raise PreconditionError(f"closed-set family misses {owner.labels[p]}↓")
        for mask in self.family:
            if not owner.is_downclosed(mask):
                raise PreconditionError(f"closed set {owner.format_mask(mask)} is not down-closed")
        for a in self.family:
            for b in self.family:
                if a & b not in members:
                    raise PreconditionError(
                        f"family is not closed under intersection: "
                        f"{owner.format_mask(a)} ∩ {owner.format_mask(b)}"
                    )

    @property
    def is_spec_backed(self) -> bool:
        return self.spec is not None

    def closure_mask(self, mask: int) -> int:
        if self.spec is not None:
            return self.spec.gamma_mask(mask)
        result = self.owner.full_mask
        for member in self.family:
            if mask & ~member == 0:
                result &= member
        return result

    def is_closed(self, mask: int) -> bool:
        return self.closure_mask(mask) == mask

    def closed_masks(self) -> List[int]:
        if self.spec is not None:
            return sorted(ideal_masks(self.spec), key=canonical_key)
        return list(self.family)

    def lattice(self) -> ClosedSetLattice:
        """闭集格 L_Γ（缓存）"""
        if self._lattice is None:
            if self.spec is not None:
                self._lattice = ideal_lattice(self.spec)
            else:
                self._lattice = lattice_of_closed_sets(self.owner, self.family, self.name)
        return self._lattice


def closure_leq(lower: ClosureRepr, upper: ClosureRepr) -> Optional[int]:
    """检查 lower ≤ upper：upper 的每个闭集都是 lower 闭的

    Returns:
        不满足时返回一个反例闭集，满足时返回 None
    """
    for mask in upper.closed_masks():
        if not lower.is_closed(mask):
            return mask
    return None


def lsame_check(first: ClosureRepr, second: ClosureRepr) -> bool:
    """逐点比较 Γ1 ≤ Γ2 与闭集包含 closed(Γ2) ⊆ closed(Γ1) 给出相同结论"""
    owner = first.owner
    check_cap("closure comparison subsets", 1 << owner.n, get_limits().max_subsets)
    pointwise = all(
        first.closure_mask(S) & ~second.closure_mask(S) == 0 for S in range(1 << owner.n)
    )
    return pointwise == (closure_leq(first, second) is None)


def parrow_map(lower: ClosureRepr, upper: ClosureRepr) -> LatticeMap:
    """φ: L_Γ' → L_Γ，φ(C) = Γ(C)；Γ' ≤ Γ

    Raises:
        PreconditionError: 某个 Γ 闭集不是 Γ' 闭的
        InvariantViolation: φ 不固定 P 或不保并
    """
    counterexample = closure_leq(lower, upper)
    if counterexample is not None:
        raise PreconditionError(
            f"{lower.owner.format_mask(counterexample)} is closed for the target but not for the source"
        )
    source, target = lower.lattice(), upper.lattice()
    phi = LatticeMap(
        source, target, tuple(target.index_of(upper.closure_mask(C)) for C in source.sets)
    )
    if not phi.fixes(source.eta_table(), target.eta_table()):
        raise InvariantViolation("φ does not fix P")
    if not phi.preserves_joins():
        raise InvariantViolation("φ does not preserve joins")
    return phi


def parrow_frame_check(upper: ClosureRepr, samples: Sequence[ClosureRepr] = ()) -> bool:
    """L_Γ 是框架 ⟺ 所有 Γ' ≤ Γ 的 φ 都保二元交

    样本总会加入 Γ_{B_P}，此时等价是精确的。
    """
    frame = is_distributive(upper.lattice())
    lowers = [ClosureRepr.from_spec(bp(upper.owner))] + [
        s for s in samples if closure_leq(s, upper) is None
    ]
    all_preserve = all(parrow_map(g, upper).preserves_binary_meets() for g in lowers)
    return frame == all_preserve


def spec_from_closure(closure: ClosureRepr) -> JoinSpec:
    """U_Γ = {T : ⋁T 存在且 ⋁T ∈ Γ(T)}；∅ ∈ U_Γ 当且仅当 P 有底元且 ⊥ ∈ Γ(∅)"""
    owner = closure.owner
    check_cap("U_Γ enumeration", 1 << owner.n, get_limits().max_subsets)
    masks = []
    for T in range(1 << owner.n):
        j = owner.join_index(T)
        if j is not None and closure.closure_mask(T) >> j & 1:
            masks.append(T)
    return JoinSpec(owner, masks, f"U_{closure.name}" if closure.name else None)


def _require_join_completion(e: PosetMap, L: FiniteLattice) -> None:
    if e.cod != L.poset:
        raise PreconditionError("completion map must land in the lattice")
    if not e.is_embedding():
        raise PreconditionError("completion map is not an order embedding")
    for x in range(L.size):
        below = [e(p) for p in range(e.dom.n) if L.leq(e(p), x)]
        if L.join_all(below) != x:
            raise PreconditionError(f"lattice element {L.label(x)} is not a join of the image")


def closure_from_completion(e: PosetMap, L: FiniteLattice, name: Optional[str] = None) -> ClosureRepr:
    """连接完备化 e: P → L 的闭集族 {e⁻¹(x↓) : x ∈ L}"""
    _require_join_completion(e, L)
    family = {e.preimage_mask(L.poset.down_masks[x]) for x in range(L.size)}
    return ClosureRepr.from_family(e.dom, family, name)


def _canonical_completion(closure: ClosureRepr):
    lattice = closure.lattice()
    eta = PosetMap(closure.owner, lattice.poset, lattice.eta_table())
    return eta, lattice


def roundtrip_check(source, L: Optional[FiniteLattice] = None) -> bool:
    """闭包与完备化之间的往返检查

    source 为 ClosureRepr 时检查 γ(δ(Γ)) 与 Γ 的闭集族相同；
    source 为 PosetMap 时还需给出 L，并额外检查 L_{γ(e)} 在 P 上同构于 L。
    """
    if isinstance(source, ClosureRepr):
        eta, lattice = _canonical_completion(source)
        back = closure_from_completion(eta, lattice)
        return set(back.closed_masks()) == set(source.closed_masks())

    if L is None:
        raise PreconditionError("a completion round trip needs the target lattice")
    e = source
    closure = closure_from_completion(e, L)
    if not roundtrip_check(closure):
        return False
    lattice = closure.lattice()
    psi = LatticeMap(
        L, lattice, tuple(lattice.index_of(e.preimage_mask(L.poset.down_masks[x])) for x in range(L.size))
    )
    if not (psi.is_order_embedding() and psi.is_surjective()):
        logger.info("completion lattice is not isomorphic to its closed sets")
        return False
    return all(psi(e(p)) == lattice.eta(p) for p in range(e.dom.n))
