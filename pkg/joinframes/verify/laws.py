"""代数定律注册表

每条定律接收一个 LawInstance，成立时返回 None，不成立时返回描述反例的字符串。
定律按套件分组：core、closure、galois、tgen、lattices、morphisms。
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from joinframes.config import check_cap, get_limits
from joinframes.errors import InputError
from joinframes.frames.distributivity import birkhoff_check, is_distributive, join_irreducibles
from joinframes.frames.frame_generating import (
    condition4_witness,
    is_frame_generating,
    meet_distribution_applies,
    strong_descent_check,
    universal_extension,
    upsilon_witness,
    verify_eta,
    carrow_check,
    cunique_jset,
)
from joinframes.frames.ideals import IdealLattice, ideal_lattice
from joinframes.model.maps import LatticeMap, PosetMap, compose, identity_map, inclusion_map
from joinframes.model.poset import Poset, bits, transitive_closure
from joinframes.morphisms.global_adjunction import global_adjunction_check
from joinframes.morphisms.lifts import (
    adjoint_check,
    continuity_check,
    embedding_check,
    is_u_morphism,
    lift,
    preimage_lift,
)
from joinframes.spec.joinspec import (
    JoinSpec,
    bp,
    bp_plus,
    restrict_spec,
    spec_intersection,
    u_alpha,
    u_infty,
    u_max,
    uplus,
    uplus_masks,
)
from joinframes.speclattice.closure import (
    ClosureRepr,
    lsame_check,
    parrow_frame_check,
    parrow_map,
    roundtrip_check,
    spec_from_closure,
)
from joinframes.speclattice.jf import (
    is_maximal,
    jf_join,
    jf_meet,
    jf_top,
    jfplus_join,
    jfplus_meet,
    reflection_check,
    sub_specifications,
    terminal_object_check,
)
from joinframes.speclattice.pruning import uminus, uminus_sequential

logger = logging.getLogger(__name__)

SUITES = ("core", "closure", "galois", "tgen", "lattices", "morphisms")

# 子规格穷举与自由框架检查的规模上限
MAX_SUBSPEC_MEMBERS = 8
MAX_FREE_FRAME = 12


class LawSkipped(Exception):
    """实例超出该定律的检查范围"""


class LawInstance:
    """一个 (P, U, V) 实例，派生对象按需计算并缓存"""

    def __init__(self, index: int, P: Poset, U: JoinSpec, V: JoinSpec):
        self.index = index
        self.P = P
        self.U = U
        self.V = V

    @cached_property
    def U_minus(self) -> JoinSpec:
        return uminus(self.U)

    @cached_property
    def V_minus(self) -> JoinSpec:
        return uminus(self.V)

    @cached_property
    def U_plus(self) -> JoinSpec:
        return uplus(self.U)

    @cached_property
    def I_U(self) -> IdealLattice:
        return ideal_lattice(self.U)

    @cached_property
    def V_plus(self) -> JoinSpec:
        return uplus(self.V)

    @cached_property
    def U_minus_plus(self) -> JoinSpec:
        return uplus(self.U_minus)

    @cached_property
    def V_minus_plus(self) -> JoinSpec:
        return uplus(self.V_minus)

    @cached_property
    def I_U_minus(self) -> IdealLattice:
        return ideal_lattice(self.U_minus)

    @cached_property
    def I_U_plus(self) -> IdealLattice:
        return ideal_lattice(self.U_plus)

    @cached_property
    def downsets(self) -> IdealLattice:
        """A(P) = I_{B_P}"""
        return ideal_lattice(bp(self.P))

    @cached_property
    def U_max(self) -> JoinSpec:
        return u_max(self.P)

    @cached_property
    def U_max_is_fg(self) -> bool:
        return upsilon_witness(self.U_max) is None

    @cached_property
    def U_is_fg(self) -> bool:
        return upsilon_witness(self.U) is None

    @cached_property
    def inclusions(self) -> List[Tuple[int, PosetMap, JoinSpec]]:
        """对每个极大元 x：(x, P 去掉 x 后到 P 的包含映射, U 在子偏序集上的限制)

        包含映射的像是下闭的，限制后的规格使它成为连续的 U-态射。
        """
        P = self.P
        if P.n < 2:
            return []
        result = []
        for x in range(P.n):
            if P.up_masks[x] != 1 << x:
                continue
            f = inclusion_map(P, P.full_mask & ~(1 << x))
            result.append((x, f, restrict_spec(self.U, f.dom, f.assignment)))
        return result

    def subsets(self) -> range:
        check_cap("law subset scan", 1 << self.P.n, get_limits().max_subsets)
        return range(1 << self.P.n)

    def fmt(self, mask: int) -> str:
        return self.P.format_mask(mask)


@dataclass(frozen=True)
class Law:
    name: str
    suite: str
    check: Callable[[LawInstance], Optional[str]]
    description: str


LAWS: Dict[str, Law] = {}


def law(suite: str, name: str):
    """注册定律的装饰器，文档字符串第一行作为描述"""
    def register(func: Callable[[LawInstance], Optional[str]]):
        if name in LAWS:
            raise ValueError(f"law '{name}' registered twice")
        doc = (func.__doc__ or "").strip().splitlines()
        LAWS[name] = Law(name, suite, func, doc[0] if doc else "")
        return func
    return register


def select_laws(names: Optional[Sequence[str]] = None) -> List[Law]:
    """按套件名或定律名选择，保持注册顺序

    Raises:
        InputError: 未知的套件或定律
    """
    if not names:
        return list(LAWS.values())
    wanted = set()
    for name in names:
        if name in SUITES:
            wanted.update(k for k, v in LAWS.items() if v.suite == name)
        elif name in LAWS:
            wanted.add(name)
        else:
            raise InputError(f"unknown law or suite '{name}'")
    return [v for k, v in LAWS.items() if k in wanted]


# core


@law("core", "covers_roundtrip")
def covers_roundtrip(inst: LawInstance) -> Optional[str]:
    """覆盖关系的自反传递闭包还原序矩阵"""
    P = inst.P
    relation = np.zeros((P.n, P.n), dtype=bool)
    for i, j in P.covers:
        relation[i, j] = True
    if not np.array_equal(transitive_closure(relation), P.leq):
        return "closure of the covers differs from the order"
    return None


@law("core", "downclose_closure")
def downclose_closure(inst: LawInstance) -> Optional[str]:
    """下闭包是外延、单调、幂等的"""
    P = inst.P
    for S in inst.subsets():
        D = P.downclose_mask(S)
        if S & ~D or P.downclose_mask(D) != D:
            return f"downclose misbehaves on {inst.fmt(S)}"
        for x in range(P.n):
            if D & ~P.downclose_mask(S | 1 << x):
                return f"downclose is not monotone at {inst.fmt(S)} + {P.labels[x]}"
    return None


@law("core", "join_is_least_upper_bound")
def join_is_least_upper_bound(inst: LawInstance) -> Optional[str]:
    """并是上界且不超过任何上界"""
    P = inst.P
    for S in inst.subsets():
        j = P.join_index(S)
        if j is None:
            continue
        if S & ~P.down_masks[j]:
            return f"join of {inst.fmt(S)} is not an upper bound"
        for u in bits(P.upper_bounds_mask(S)):
            if not P.le(j, u):
                return f"join of {inst.fmt(S)} is not below the upper bound {P.labels[u]}"
    return None


@law("core", "gamma_standard")
def gamma_standard(inst: LawInstance) -> Optional[str]:
    """Γ_U 是标准闭包算子"""
    P, U = inst.P, inst.U
    for p in range(P.n):
        if U.gamma_mask(1 << p) != P.down_masks[p]:
            return f"Γ({{{P.labels[p]}}}) is not {P.labels[p]}↓"
    for S in inst.subsets():
        G = U.gamma_mask(S)
        if S & ~G:
            return f"Γ is not extensive on {inst.fmt(S)}"
        if U.gamma_mask(G) != G:
            return f"Γ is not idempotent on {inst.fmt(S)}"
        for x in range(P.n):
            if G & ~U.gamma_mask(S | 1 << x):
                return f"Γ is not monotone at {inst.fmt(S)} + {P.labels[x]}"
    return None


@law("core", "ideals_are_fixpoints")
def ideals_are_fixpoints(inst: LawInstance) -> Optional[str]:
    """Γ(S) 是理想，且 S 是理想当且仅当 Γ(S) = S"""
    U = inst.U
    for S in inst.subsets():
        G = U.gamma_mask(S)
        if not U.is_ideal_mask(G):
            return f"Γ({inst.fmt(S)}) = {inst.fmt(G)} is not an ideal"
        if U.is_ideal_mask(S) != (G == S):
            return f"ideal test and fixpoint disagree on {inst.fmt(S)}"
    return None


# closure


@law("closure", "upsilon_formula")
def upsilon_formula(inst: LawInstance) -> Optional[str]:
    """Υ 的成员公式与按定义的枚举一致"""
    U = inst.U
    for S in inst.subsets():
        fast, slow = U.upsilon_mask(S), U.upsilon_enumerated_mask(S)
        if fast != slow:
            return f"Υ({inst.fmt(S)}): formula {inst.fmt(fast)}, enumeration {inst.fmt(slow)}"
    return None


@law("closure", "fix")
def fix(inst: LawInstance) -> Optional[str]:
    """Γ(S) 中的上界就是 ⋁S；⋁S ∈ Γ(S) 时 S ∈ U⁺"""
    P, U = inst.P, inst.U
    for S in inst.subsets():
        G = U.gamma_mask(S)
        j = P.join_index(S)
        for p in bits(G & P.upper_bounds_mask(S)):
            if p != j:
                return f"upper bound {P.labels[p]} of {inst.fmt(S)} lies in Γ but is not the join"
        if j is not None and G >> j & 1 and not U.in_uplus_mask(S):
            return f"⋁{inst.fmt(S)} ∈ Γ but the set is not in U⁺"
    return None


@law("closure", "cap")
def cap(inst: LawInstance) -> Optional[str]:
    """x ∈ Υ(S) ⟺ x ∈ Υ(x↓ ∩ S↓)"""
    P, U = inst.P, inst.U
    for S in inst.subsets():
        full = U.upsilon_enumerated_mask(S)
        down = P.downclose_mask(S)
        for x in range(P.n):
            local = U.upsilon_enumerated_mask(P.down_masks[x] & down)
            if (full >> x & 1) != (local >> x & 1):
                return f"membership of {P.labels[x]} in Υ({inst.fmt(S)}) changes on restriction"
    return None


@law("closure", "equal")
def equal(inst: LawInstance) -> Optional[str]:
    """再迭代一步 Υ 不增加元素"""
    U = inst.U
    for S in inst.subsets():
        once = U.upsilon_enumerated_mask(S)
        twice = U.upsilon_enumerated_mask(once, downclose=False)
        if twice != once:
            return f"second Υ step on {inst.fmt(S)} adds {inst.fmt(twice & ~once)}"
    return None


@law("closure", "upsilon_within_gamma")
def upsilon_within_gamma(inst: LawInstance) -> Optional[str]:
    """Υ(S) ⊆ Γ(S)"""
    U = inst.U
    for S in inst.subsets():
        extra = U.upsilon_mask(S) & ~U.gamma_mask(S)
        if extra:
            return f"Υ({inst.fmt(S)}) contains {inst.fmt(extra)} outside Γ"
    return None


@law("closure", "down")
def down(inst: LawInstance) -> Optional[str]:
    """S ∈ U 时 Υ(S) 下闭当且仅当 Υ(S) = Γ(S)"""
    P, U = inst.P, inst.U
    for S in U.masks:
        Y = U.upsilon_mask(S)
        if P.is_downclosed(Y) != (Y == U.gamma_mask(S)):
            return f"Υ({inst.fmt(S)}) = {inst.fmt(Y)} breaks the down-closure criterion"
    return None


# galois


@law("galois", "uplus_adjunction")
def uplus_adjunction(inst: LawInstance) -> Optional[str]:
    """U ⊆ U⁺，U⁺ 幂等，Γ_{U⁺} = Γ_U"""
    U, plus = inst.U, inst.U_plus
    if not U.issubset(plus):
        return "U is not contained in U⁺"
    if uplus(plus) != plus:
        return "U⁺ is not idempotent"
    for S in inst.subsets():
        if plus.gamma_mask(S) != U.gamma_mask(S):
            return f"Γ_U⁺ and Γ_U differ on {inst.fmt(S)}"
    return None


@law("galois", "closure_spec")
def closure_spec(inst: LawInstance) -> Optional[str]:
    """U_{Γ_U} = U⁺，且 Γ_{U_Γ} ≤ Γ 逐点成立"""
    closure = ClosureRepr.from_spec(inst.V)
    derived = spec_from_closure(closure)
    if derived != inst.V_plus:
        return "U_Γ of Γ_V differs from V⁺"
    for S in inst.subsets():
        if derived.gamma_mask(S) & ~closure.closure_mask(S):
            return f"Γ_(U_Γ) exceeds Γ on {inst.fmt(S)}"
    return None


@law("galois", "capmax")
def capmax(inst: LawInstance) -> Optional[str]:
    """两个极大规格的交仍极大"""
    first, second = inst.U_plus, inst.V_plus
    if not (is_maximal(first) and is_maximal(second)):
        return "U⁺ is not maximal"
    if not is_maximal(spec_intersection([first, second])):
        return "intersection of maximal specifications is not maximal"
    return None


@law("galois", "same")
def same(inst: LawInstance) -> Optional[str]:
    """逐点比较闭包与比较闭集族结论相同"""
    first, second = ClosureRepr.from_spec(inst.U), ClosureRepr.from_spec(inst.V)
    if not (lsame_check(first, second) and lsame_check(second, first)):
        return "pointwise order and closed-set inclusion disagree"
    return None


@law("galois", "reflection")
def reflection(inst: LawInstance) -> Optional[str]:
    """U1⁺ ⊆ U2 ⟺ U1 ⊆ U2（U1 ∈ JF，U2 ∈ JF⁺）"""
    A, B = inst.U_minus, inst.V_minus
    A_plus, B_plus = inst.U_minus_plus, inst.V_minus_plus
    samples = [(A, B_plus), (B, A_plus), (A, A_plus), (bp(inst.P), B_plus)]
    if not reflection_check(inst.P, samples):
        return "reflection biconditional fails"
    return None


@law("galois", "parrow")
def parrow(inst: LawInstance) -> Optional[str]:
    """Γ' ≤ Γ 时 φ 存在；L_Γ 是框架当且仅当各 φ 保二元交"""
    upper = ClosureRepr.from_spec(inst.U)
    lower = ClosureRepr.from_spec(inst.U_minus)
    parrow_map(lower, upper)
    if not parrow_frame_check(upper, [lower, ClosureRepr.from_spec(inst.V)]):
        return "frame test and φ meet preservation disagree"
    return None


# tgen


@law("tgen", "methods_agree")
def methods_agree(inst: LawInstance) -> Optional[str]:
    """五种框架生成判定方法结论一致"""
    for spec in (inst.U, inst.V, inst.U_minus):
        report = is_frame_generating(spec, "all")
        weak = condition4_witness(spec, uplus_masks(spec)) is None
        if weak != report.verdict:
            return f"condition 4 over U⁺ disagrees on {spec!r}"
    return None


@law("tgen", "strong_descent")
def strong_descent(inst: LawInstance) -> Optional[str]:
    """对 U_∞ 强下降性质等价于框架生成"""
    spec = u_infty(inst.P)
    if strong_descent_check(spec) != (upsilon_witness(spec) is None):
        return "strong descent and frame generation disagree on U_inf"
    return None


@law("tgen", "meet_distribution")
def meet_distribution(inst: LawInstance) -> Optional[str]:
    """U ⊆ U_α ⊆ U⁺ 且 P 逐点交分配时 U 框架生成"""
    P = inst.P
    candidates = [inst.U, inst.V] + [u_alpha(P, alpha) for alpha in range(2, P.n + 2)]
    applied = 0
    for spec in candidates:
        if not meet_distribution_applies(spec):
            continue
        applied += 1
        if upsilon_witness(spec) is not None:
            return f"{spec!r} distributes meets over its joins but is not frame-generating"
    if not applied:
        raise LawSkipped()
    return None


@law("tgen", "carrow")
def carrow(inst: LawInstance) -> Optional[str]:
    """框架生成时 Γ 与有限交交换"""
    if not inst.U_is_fg:
        raise LawSkipped()
    P, U = inst.P, inst.U
    sets = sorted({P.downclose_mask(S) for S in U.masks + inst.V.masks})[:8]
    for a in sets:
        for b in sets:
            if not carrow_check(U, [a, b]):
                return f"Γ does not commute with {inst.fmt(a)} ∩ {inst.fmt(b)}"
    return None


@law("tgen", "subspec_meets")
def subspec_meets(inst: LawInstance) -> Optional[str]:
    """框架生成时，每个子规格的 φ 都保二元交"""
    if not inst.U_is_fg:
        raise LawSkipped()
    upper = ClosureRepr.from_spec(inst.U)
    for S in inst.U.nontrivial_masks():
        lower = ClosureRepr.from_spec(inst.U.without([S]))
        if not parrow_map(lower, upper).preserves_binary_meets():
            return f"φ from U without {inst.fmt(S)} does not preserve meets"
    return None


@law("tgen", "uminus_greatest")
def uminus_greatest(inst: LawInstance) -> Optional[str]:
    """U⁻ 框架生成、包含于 U，并包含每个框架生成的子规格"""
    core = inst.U_minus
    if upsilon_witness(core) is not None:
        return "U⁻ is not frame-generating"
    if not core.issubset(inst.U):
        return "U⁻ is not contained in U"
    sequential = uminus_sequential(inst.U)
    if upsilon_witness(sequential) is not None or not sequential.issubset(core):
        return "one-at-a-time pruning left the greatest frame-generating subspecification"
    if len(inst.U.nontrivial_masks()) > MAX_SUBSPEC_MEMBERS:
        return None
    for sub in sub_specifications(inst.U):
        if upsilon_witness(sub) is None and not sub.issubset(core):
            return f"frame-generating {sub!r} is not contained in U⁻"
    return None


@law("tgen", "eta")
def eta(inst: LawInstance) -> Optional[str]:
    """η 是保交的 U-嵌入并在 I_U 中并稠密"""
    if not verify_eta(inst.U, inst.I_U):
        return "η fails on the ideal lattice"
    return None


@law("tgen", "universal_extension")
def universal_extension_law(inst: LawInstance) -> Optional[str]:
    """η_U 作为 U⁻-嵌入延拓为 φ"""
    L = inst.I_U
    e = PosetMap(inst.P, L.poset, L.eta_table())
    h = universal_extension(inst.U_minus, e, L)
    phi = parrow_map(ClosureRepr.from_spec(inst.U_minus), ClosureRepr.from_spec(inst.U))
    if h.assignment != phi.assignment:
        return "extension of η differs from φ"
    return None


@law("tgen", "unique_jset")
def unique_jset(inst: LawInstance) -> Optional[str]:
    """框架生成时并不可约元恰是 η[J]，且 I_U 满足 Birkhoff 表示"""
    if not inst.U_is_fg:
        raise LawSkipped()
    L = inst.I_U
    expected = {L.eta(p) for p in cunique_jset(inst.U).members}
    if set(join_irreducibles(L).members) != expected:
        return "join-irreducibles differ from the images of the unique set"
    if not birkhoff_check(L):
        return "ideal lattice is not the downset lattice of its join-irreducibles"
    return None


# lattices


@law("lattices", "limits")
def limits(inst: LawInstance) -> Optional[str]:
    """JF 中的并是并集，JF⁺ 中的交是交集"""
    A, B = inst.U_minus, inst.V_minus
    # 两个运算在结果离开 JF / JF⁺ 时抛出 InvariantViolation
    jf_join([A, B])
    jfplus_meet([inst.U_minus_plus, inst.V_minus_plus])
    return None


@law("lattices", "lattice_laws")
def lattice_laws(inst: LawInstance) -> Optional[str]:
    """JF 运算交换、幂等、吸收；JF⁺ 的并极大且包含两侧"""
    A, B = inst.U_minus, inst.V_minus
    if jf_join([A, B]) != jf_join([B, A]) or jf_meet([A, B]) != jf_meet([B, A]):
        return "JF operations are not commutative"
    if jf_join([A, A]) != A or jf_meet([A, A]) != A:
        return "JF operations are not idempotent"
    if jf_join([A, jf_meet([A, B])]) != A or jf_meet([A, jf_join([A, B])]) != A:
        return "absorption fails in JF"
    plus = jfplus_join([inst.U_minus_plus, inst.V_minus_plus])
    if not (is_maximal(plus) and upsilon_witness(plus) is None):
        return "JF⁺ join left JF⁺"
    if not (A.issubset(plus) and B.issubset(plus)):
        return "JF⁺ join is not an upper bound"
    return None


@law("lattices", "top_and_bottom")
def top_and_bottom(inst: LawInstance) -> Optional[str]:
    """U_max⁻ 是顶；B_P 与 B_P⁺ 是底"""
    P = inst.P
    top = jf_top(P)
    if upsilon_witness(top) is not None or not is_maximal(top):
        return "top is not a maximal frame-generating specification"
    if not (inst.U_minus.issubset(top) and inst.V_minus.issubset(top)):
        return "top does not contain the sampled frame-generating specifications"
    if not is_distributive(inst.downsets):
        return "downset lattice is not distributive"
    bottom_plus = bp_plus(P)
    if not is_maximal(bottom_plus) or bottom_plus != uplus(bp(P)):
        return "B_P⁺ is not the maximal bottom"
    return None


@law("lattices", "terminal_object")
def terminal_object(inst: LawInstance) -> Optional[str]:
    """固定 P 的保并映射 I_U → L 存在当且仅当 U ⊆ (U_e)⁻"""
    L = inst.I_U_minus
    e = PosetMap(inst.P, L.poset, L.eta_table())
    if not terminal_object_check(e, L, specs=[inst.U_minus, inst.V_minus]):
        return "terminal-object biconditional fails"
    return None


@law("lattices", "closure_roundtrip")
def closure_roundtrip(inst: LawInstance) -> Optional[str]:
    """闭包与完备化往返一致"""
    if not roundtrip_check(ClosureRepr.from_spec(inst.U)):
        return "closure round trip changes the closed sets"
    L = inst.I_U
    e = PosetMap(inst.P, L.poset, L.eta_table())
    if not roundtrip_check(e, L):
        return "completion round trip is not an isomorphism over P"
    return None


@law("lattices", "contained")
def contained(inst: LawInstance) -> Optional[str]:
    """存在固定 P 的保并映射时 U_Γ 随之包含"""
    lower, upper = ClosureRepr.from_spec(inst.U_minus), ClosureRepr.from_spec(inst.U)
    parrow_map(lower, upper)
    if not spec_from_closure(lower).issubset(spec_from_closure(upper)):
        return "U_Γ of the source is not contained in that of the target"
    return None


# morphisms


@law("morphisms", "identity_lift")
def identity_lift(inst: LawInstance) -> Optional[str]:
    """恒等映射的提升就是 φ，框架生成时保二元交"""
    f = identity_map(inst.P)
    if not continuity_check(f, inst.U_minus, inst.U):
        return "identity is not continuous from U⁻ to U"
    lifted = lift(f, inst.U_minus, inst.U, cod=inst.I_U)
    phi = parrow_map(ClosureRepr.from_spec(inst.U_minus), ClosureRepr.from_spec(inst.U))
    if lifted.assignment != phi.assignment:
        return "lift of the identity differs from φ"
    if inst.U_is_fg and not lifted.preserves_binary_meets():
        return "lift of the identity into a frame does not preserve meets"
    return None


@law("morphisms", "lift_functorial")
def lift_functorial(inst: LawInstance) -> Optional[str]:
    """(g∘f)⁺ = g⁺∘f⁺，沿 U⁻ → U → U⁺ 的恒等映射以及两次去掉极大元的包含映射"""
    P = inst.P
    f = g = identity_map(P)
    A, B, C = inst.I_U_minus, inst.I_U, inst.I_U_plus
    f_plus = lift(f, inst.U_minus, inst.U, dom=A, cod=B)
    g_plus = lift(g, inst.U, inst.U_plus, dom=B, cod=C)
    gf_plus = lift(identity_map(P), inst.U_minus, inst.U_plus, dom=A, cod=C)
    if g_plus.compose(f_plus).assignment != gf_plus.assignment:
        return "lift is not functorial"
    for x, g, W1 in inst.inclusions[:1]:
        sub = g.dom
        tops = [y for y in range(sub.n) if sub.up_masks[y] == 1 << y] if sub.n >= 2 else []
        if not tops:
            continue
        f = inclusion_map(sub, sub.full_mask & ~(1 << tops[0]))
        W2 = restrict_spec(W1, f.dom, f.assignment)
        A, B = ideal_lattice(W2), ideal_lattice(W1)
        f_plus = lift(f, W2, W1, dom=A, cod=B)
        g_plus = lift(g, W1, inst.U, dom=B, cod=inst.I_U)
        gf_plus = lift(compose(g, f), W2, inst.U, dom=A, cod=inst.I_U)
        if g_plus.compose(f_plus).assignment != gf_plus.assignment:
            dropped = f"{P.labels[x]} then {sub.labels[tops[0]]}"
            return f"lift is not functorial along the inclusions dropping {dropped}"
    return None


@law("morphisms", "inclusion_lift")
def inclusion_lift(inst: LawInstance) -> Optional[str]:
    """去掉一个极大元的包含映射：f⁺ ⊣ f⁻¹，嵌入判据一致，U 框架生成时 f⁺ 保二元交"""
    if not inst.inclusions:
        raise LawSkipped()
    for x, f, W in inst.inclusions:
        label = inst.P.labels[x]
        if not (is_u_morphism(f, W) and continuity_check(f, W, inst.U)):
            return f"inclusion without {label} is not a continuous U-morphism"
        lifted = lift(f, W, inst.U, cod=inst.I_U)
        back = preimage_lift(f, W, inst.U, dom=lifted.dom, cod=inst.I_U)
        if not adjoint_check(lifted, back):
            return f"lift of the inclusion without {label} is not left adjoint to the preimage map"
        if not embedding_check(f, W, inst.U, dom=lifted.dom, cod=inst.I_U):
            return f"order-embedding scan and preimage test disagree for the inclusion without {label}"
        if inst.U_is_fg and not lifted.preserves_binary_meets():
            return f"lift of the inclusion without {label} into a frame does not preserve meets"
    return None


@law("morphisms", "closure_adjoint")
def closure_adjoint(inst: LawInstance) -> Optional[str]:
    """Γ_U: A(P) → I_U 左伴随于包含映射"""
    downsets = inst.downsets
    L = inst.I_U
    fwd = LatticeMap(downsets, L, tuple(L.index_of(inst.U.gamma_mask(C)) for C in downsets.sets))
    bwd = LatticeMap(L, downsets, tuple(downsets.index_of(C) for C in L.sets))
    if not adjoint_check(fwd, bwd):
        return "Γ is not left adjoint to the inclusion"
    return None


@law("morphisms", "global_adjunction")
def global_adjunction(inst: LawInstance) -> Optional[str]:
    """U_max(P) 框架生成时 F ⊣ U 的三角恒等式成立，η 沿包含映射自然"""
    P = inst.P
    if not inst.U_max_is_fg:
        raise LawSkipped()
    if ideal_lattice(inst.U_max).size > MAX_FREE_FRAME:
        raise LawSkipped()
    if not global_adjunction_check(P, [identity_map(P)]):
        return "triangle identities or naturality fail"
    for x, f, _ in inst.inclusions:
        scheme = u_max(f.dom)
        if upsilon_witness(scheme) is not None or not is_u_morphism(f, scheme):
            continue
        if ideal_lattice(scheme).size > MAX_FREE_FRAME:
            continue
        if not global_adjunction_check(f.dom, [f]):
            return f"naturality fails along the inclusion without {P.labels[x]}"
    return None
