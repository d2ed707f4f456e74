"""框架生成判定

对连接规格 U 判定 I_U 是否为框架，提供五种相互独立的方法：
    1  枚举 I_U 并检查分配律
    4  p↓ ∩ Γ_U(S) = Γ_U(p↓ ∩ S↓)，S ∈ U，p ≤ ⋁S
    5  Υ_U(S) 对所有 S ∈ U 下闭（默认，不需要枚举理想）
    7  所有下集 S 上 Γ_U(S) = Υ_U(S)
    10 U-下降性质：p ≤ ⋁S 时存在 T ∈ U⁺，T ⊆ S↓ 且 ⋁T = p
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from joinframes.config import check_cap, get_limits
from joinframes.errors import InputError, InvariantViolation, PreconditionError
from joinframes.frames.distributivity import is_distributive
from joinframes.frames.ideals import IdealLattice, ideal_lattice
from joinframes.model.lattice import FiniteLattice
from joinframes.model.maps import LatticeMap, PosetMap
from joinframes.model.poset import ElemSet, bits, downset_masks, popcount
from joinframes.spec.joinspec import JoinSpec, bp_plus_member, radius, u_alpha, uplus_masks

logger = logging.getLogger(__name__)

METHODS = ("1", "4", "5", "7", "10")

Witness = Tuple[int, int]


@dataclass
class FrameGenReport:
    """框架生成判定结果

    witness 为 (S 的掩码, p 的下标)：S ∈ U，p ≤ ⋁S，p ∉ Υ_U(S)。
    """

    spec: JoinSpec
    verdict: bool
    method: str
    witness: Optional[Witness] = None
    verdicts: Dict[str, bool] = field(default_factory=dict)

    def witness_labels(self) -> Optional[Tuple[List[str], str]]:
        if self.witness is None:
            return None
        S, p = self.witness
        owner = self.spec.owner
        return owner.labels_of(S), owner.labels[p]

    def to_dict(self) -> Dict:
        labels = self.witness_labels()
        return {
            "spec": self.spec.name,
            "frame_generating": self.verdict,
            "method": self.method,
            "verdicts": dict(sorted(self.verdicts.items(), key=lambda kv: int(kv[0]))),
            "witness": None if labels is None else {"S": labels[0], "p": labels[1]},
        }


def _join_of(U: JoinSpec, S: int) -> int:
    return U.owner.bottom if S == 0 else U.joins[S]


def upsilon_witness(U: JoinSpec) -> Optional[Witness]:
    """方法 5：第一个 Υ_U(S) 不下闭的 S 及 (⋁S)↓ 中缺失的最小元素"""
    owner = U.owner
    for S in U.masks:
        if popcount(S) < 2:
            continue
        missing = owner.down_masks[U.joins[S]] & ~U.upsilon_mask(S)
        if missing:
            return S, (missing & -missing).bit_length() - 1
    return None


def condition4_witness(U: JoinSpec, masks: Optional[Iterable[int]] = None) -> Optional[Witness]:
    """方法 4；masks 缺省为 U 的成员，也可传入 U⁺ 的成员做弱化检查"""
    owner = U.owner
    for S in U.masks if masks is None else masks:
        if S and owner.join_index(S) is None:
            continue
        closed = U.gamma_mask(S)
        down = owner.downclose_mask(S)
        j = owner.bottom if S == 0 else owner.join_index(S)
        for p in bits(owner.down_masks[j]):
            pdown = owner.down_masks[p]
            if pdown & closed != U.gamma_mask(pdown & down):
                return S, p
    return None


def condition7_witness(U: JoinSpec) -> Optional[Witness]:
    """方法 7：所有下集 S 上最小理想等于 Υ_U(S)"""
    for D in sorted(downset_masks(U.owner)):
        extra = U.gamma_mask(D) & ~U.upsilon_mask(D)
        if extra:
            return D, (extra & -extra).bit_length() - 1
    return None


def meet_distribution_witness(U: JoinSpec) -> Optional[Witness]:
    """第一个使逐点交分配失败的 (T, p)，T ∈ U

    p∧⋁T 存在时要求每个 p∧t 存在、⋁_T (p∧t) 存在且等于 p∧⋁T。
    """
    owner = U.owner
    for T in U.masks:
        j = _join_of(U, T)
        for p in range(owner.n):
            lhs = owner.meet_index(1 << p | 1 << j)
            if lhs is None:
                continue
            meets = 0
            for t in bits(T):
                m = owner.meet_index(1 << p | 1 << t)
                if m is None:
                    return T, p
                meets |= 1 << m
            if owner.join_index(meets) != lhs:
                return T, p
    return None


def meet_distribution_applies(U: JoinSpec, alpha: Optional[int] = None) -> bool:
    """U ⊆ U_α ⊆ U⁺ 且 P 在 U 上逐点交分配；成立时 I_U 是框架

    alpha 缺省取 U 的半径，即满足 U ⊆ U_α 的最小值。
    """
    alpha = radius(U) if alpha is None else alpha
    if 0 in U.mask_set or any(popcount(S) >= alpha for S in U.masks):
        return False
    if not all(U.in_uplus_mask(S) for S in u_alpha(U.owner, alpha).masks):
        return False
    witness = meet_distribution_witness(U)
    if witness is not None:
        T, p = witness
        logger.debug(f"meet distribution fails for {U.owner.labels[p]} and {U.owner.format_mask(T)}")
    return witness is None


def confirm_witness(U: JoinSpec, witness: Witness) -> None:
    """方法 5 的见证 (S, p) 也必须是方法 4 与方法 7 的反例

    Raises:
        InvariantViolation: 见证不满足 p ≤ ⋁S、p ∉ Υ_U(S)，或在 S 处条件 4 成立，
            或在下集 S↓ 处条件 7 成立
    """
    S, p = witness
    owner = U.owner
    name = f"({owner.format_mask(S)}, {owner.labels[p]})"
    if S not in U.mask_set or not owner.le(p, _join_of(U, S)) or U.upsilon_mask(S) >> p & 1:
        raise InvariantViolation(f"{name} is not a Υ witness for {U!r}")
    pdown = owner.down_masks[p]
    down = owner.downclose_mask(S)
    if pdown & U.gamma_mask(S) == U.gamma_mask(pdown & down):
        raise InvariantViolation(f"condition 4 holds at the Υ witness {name}")
    if not U.gamma_mask(down) >> p & 1 or U.upsilon_mask(down) >> p & 1:
        raise InvariantViolation(f"condition 7 holds on the down-closure of the Υ witness {name}")


def _has_descent(U: JoinSpec, S: int, p: int, strong: bool) -> bool:
    owner = U.owner
    base = owner.down_masks[p] & owner.downclose_mask(S)
    if strong:
        return any(T & ~base == 0 and _join_of(U, T) == p for T in U.masks)
    check_cap("descent search subsets", 1 << popcount(base), get_limits().max_subsets)
    T = base
    while True:
        if owner.join_index(T) == p and U.in_uplus_mask(T):
            return True
        if T == 0:
            return False
        T = (T - 1) & base


def descent_witness(U: JoinSpec, strong: bool = False) -> Optional[Witness]:
    """方法 10：U-下降性质（strong=True 时要求 T ∈ U）

    S 取遍 U 的全部成员并在 S↓ 内寻找 T。
    """
    owner = U.owner
    for S in U.masks:
        j = _join_of(U, S)
        for p in bits(owner.down_masks[j]):
            if not _has_descent(U, S, p, strong):
                return S, p
    return None


def _distributive_ideals(U: JoinSpec) -> bool:
    return is_distributive(ideal_lattice(U))


def method_verdict(U: JoinSpec, method: str) -> bool:
    """单个方法的判定"""
    if method == "1":
        return _distributive_ideals(U)
    if method == "4":
        return condition4_witness(U) is None
    if method == "5":
        return upsilon_witness(U) is None
    if method == "7":
        return condition7_witness(U) is None
    if method == "10":
        return descent_witness(U) is None
    raise InputError(f"unknown frame-generating method '{method}'")


def is_frame_generating(U: JoinSpec, method: Union[str, int] = "5") -> FrameGenReport:
    """判定 U 是否框架生成

    Args:
        U: 连接规格
        method: "1"、"4"、"5"、"7"、"10" 或 "all"

    Returns:
        FrameGenReport: 失败时给出方法 5 的规范见证，并已对照方法 4 与 7 复核

    Raises:
        InvariantViolation: 所请求的方法结论不一致
    """
    method = str(method)
    methods = METHODS if method == "all" else (method,)
    verdicts = {m: method_verdict(U, m) for m in methods}
    if len(set(verdicts.values())) > 1:
        raise InvariantViolation(f"frame-generating methods disagree on {U!r}: {verdicts}")
    verdict = next(iter(verdicts.values()))
    witness = None if verdict else upsilon_witness(U)
    if not verdict:
        if witness is None:
            raise InvariantViolation(f"no Υ witness although {U!r} is not frame-generating")
        confirm_witness(U, witness)
    return FrameGenReport(U, verdict, method, witness, verdicts)


def descent_check(U: JoinSpec) -> FrameGenReport:
    witness = descent_witness(U)
    return FrameGenReport(U, witness is None, "10", witness, {"10": witness is None})


def strong_descent_check(U: JoinSpec) -> bool:
    return descent_witness(U, strong=True) is None


def verify_eta(U: JoinSpec, L: Optional[IdealLattice] = None) -> bool:
    """检查 η: p ↦ p↓ 是完全保交的 U-嵌入并且在 I_U 中并稠密"""
    L = L if L is not None else ideal_lattice(U)
    owner = U.owner
    eta = L.eta_table()
    for p in range(owner.n):
        for q in range(owner.n):
            if owner.le(p, q) != L.leq(eta[p], eta[q]):
                logger.debug(f"η is not an order embedding at {owner.labels[p]}, {owner.labels[q]}")
                return False
    check_cap("meet scan subsets", 1 << owner.n, get_limits().max_subsets)
    for S in range(1 << owner.n):
        m = owner.meet_index(S)
        if m is not None and L.meet_all(eta[s] for s in bits(S)) != eta[m]:
            logger.debug(f"η does not preserve the meet of {owner.format_mask(S)}")
            return False
    for S in U.masks:
        if L.join_all(eta[s] for s in bits(S)) != eta[_join_of(U, S)]:
            logger.debug(f"η does not preserve the join of {owner.format_mask(S)}")
            return False
    for c, mask in enumerate(L.sets):
        if L.join_all(eta[p] for p in bits(mask)) != c:
            logger.debug(f"ideal {owner.format_mask(mask)} is not a join of principal ideals")
            return False
    return True


def universal_extension(U: JoinSpec, e: PosetMap, L: FiniteLattice,
                        ideals: Optional[IdealLattice] = None) -> LatticeMap:
    """由 U-嵌入 e: P → L 得到唯一的完全保并映射 h: I_U → L，h(C) = ⋁ e[C]

    Raises:
        PreconditionError: e 不是 U-嵌入
        InvariantViolation: h 不保并或不固定 P
    """
    if e.dom != U.owner or e.cod != L.poset:
        raise PreconditionError("e must map the specification's poset into L")
    if not e.is_embedding():
        raise PreconditionError("e is not an order embedding")
    if not e.preserves_joins_of(U.masks):
        raise PreconditionError("e does not preserve the joins of U")
    ideals = ideals if ideals is not None else ideal_lattice(U)
    assignment = tuple(L.join_all(e(p) for p in bits(mask)) for mask in ideals.sets)
    h = LatticeMap(ideals, L, assignment)
    if not h.preserves_joins():
        raise InvariantViolation("extension h does not preserve joins")
    if not all(h(ideals.eta(p)) == e(p) for p in range(U.owner.n)):
        raise InvariantViolation("extension h does not fix P")
    return h


def cunique_jset(U: JoinSpec) -> ElemSet:
    """{p : p ≠ ⋁S 对所有 S ∈ U⁺ \\ B_P⁺}"""
    owner = U.owner
    excluded = 0
    for T in uplus_masks(U):
        if T == 0:
            excluded |= 1 << owner.bottom
        elif not bp_plus_member(owner, T):
            excluded |= 1 << owner.join_index(T)
    return ElemSet(owner, owner.full_mask & ~excluded)


def carrow_sides(U: JoinSpec, sets: Sequence[Union[int, ElemSet]]) -> Tuple[int, int]:
    """返回 (Γ_U(⋂ S_j↓), ⋂ Γ_U(S_j))"""
    if not sets:
        raise InputError("the family of sets must be non-empty")
    owner = U.owner
    masks = [s.mask if isinstance(s, ElemSet) else s for s in sets]
    common = owner.full_mask
    rhs = owner.full_mask
    for mask in masks:
        common &= owner.downclose_mask(mask)
        rhs &= U.gamma_mask(mask)
    return U.gamma_mask(common), rhs


def carrow_check(U: JoinSpec, sets: Sequence[Union[int, ElemSet]]) -> bool:
    lhs, rhs = carrow_sides(U, sets)
    if lhs != rhs:
        owner = U.owner
        logger.info(
            f"Γ of the intersection is {owner.format_mask(lhs)}, "
            f"intersection of Γ is {owner.format_mask(rhs)}"
        )
    return lhs == rhs
