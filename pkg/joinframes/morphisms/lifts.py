"""U-态射、理想格提升 f⁺ 与伴随对检查"""

import logging
from itertools import product
from typing import Iterator, Optional

from joinframes.errors import InvariantViolation, OwnerMismatchError, PreconditionError
from joinframes.frames.ideals import IdealLattice, ideal_lattice, ideal_masks
from joinframes.model.lattice import ClosedSetLattice, FiniteLattice
from joinframes.model.maps import LatticeMap, PosetMap
from joinframes.spec.joinspec import JoinSpec

logger = logging.getLogger(__name__)


def is_monotone(f: PosetMap) -> bool:
    return f.is_monotone()


def is_embedding(f: PosetMap) -> bool:
    return f.is_embedding()


def _check_owner(f: PosetMap, U_P: JoinSpec, U_Q: Optional[JoinSpec] = None) -> None:
    if U_P.owner != f.dom:
        raise OwnerMismatchError("domain specification belongs to another poset")
    if U_Q is not None and U_Q.owner != f.cod:
        raise OwnerMismatchError("codomain specification belongs to another poset")


def is_u_morphism(f: PosetMap, U_P: JoinSpec) -> bool:
    """f 单调，且对每个 S ∈ U_P，⋁f[S] 存在且等于 f(⋁S)"""
    _check_owner(f, U_P)
    return f.is_monotone() and f.preserves_joins_of(U_P.masks)


def continuity_check(f: PosetMap, U_P: JoinSpec, U_Q: JoinSpec) -> bool:
    """每个 U_Q-理想的原像都是 U_P-理想"""
    _check_owner(f, U_P, U_Q)
    for C in ideal_masks(U_Q):
        preimage = f.preimage_mask(C)
        if not U_P.is_ideal_mask(preimage):
            logger.debug(
                f"preimage of {f.cod.format_mask(C)} is {f.dom.format_mask(preimage)}, not an ideal"
            )
            return False
    return True


def lift(f: PosetMap, U_P: JoinSpec, U_Q: JoinSpec,
         dom: Optional[IdealLattice] = None, cod: Optional[IdealLattice] = None) -> LatticeMap:
    """f⁺: I_{U_P} → I_{U_Q}，C ↦ Γ_{U_Q}(f[C])

    Raises:
        PreconditionError: f 不是 U_P-态射
        InvariantViolation: f 连续但 f⁺ 不保并
    """
    _check_owner(f, U_P, U_Q)
    if not is_u_morphism(f, U_P):
        raise PreconditionError("map is not a U-morphism for the domain specification")
    dom = dom if dom is not None else ideal_lattice(U_P)
    cod = cod if cod is not None else ideal_lattice(U_Q)
    lifted = LatticeMap(
        dom, cod, tuple(cod.index_of(U_Q.gamma_mask(f.image_mask(C))) for C in dom.sets)
    )
    if continuity_check(f, U_P, U_Q) and not lifted.preserves_joins():
        raise InvariantViolation("lift of a continuous map does not preserve joins")
    return lifted


def monotone_maps(dom: FiniteLattice, cod: FiniteLattice) -> Iterator[LatticeMap]:
    """枚举全部单调映射（仅用于很小的格）"""
    for assignment in product(range(cod.size), repeat=dom.size):
        candidate = LatticeMap(dom, cod, assignment)
        if candidate.is_monotone():
            yield candidate


def adjoint_check(fwd: LatticeMap, bwd: LatticeMap) -> bool:
    """fwd(x) ≤ y ⟺ x ≤ bwd(y)

    若 bwd 是两个闭集格之间固定 P 的嵌入，还要求它按闭集看就是包含 C ↦ C。
    """
    if fwd.cod is not bwd.dom or bwd.cod is not fwd.dom:
        raise OwnerMismatchError("maps do not form a pair between the same lattices")
    if not (fwd.is_monotone() and bwd.is_monotone()):
        raise PreconditionError("adjoint pairs must be monotone")
    L1, L2 = fwd.dom, fwd.cod
    for x in range(L1.size):
        for y in range(L2.size):
            if L2.leq(fwd(x), y) != L1.leq(x, bwd(y)):
                return False
    if isinstance(L1, ClosedSetLattice) and isinstance(L2, ClosedSetLattice) and L1.owner == L2.owner:
        if bwd.is_order_embedding() and bwd.fixes(L2.eta_table(), L1.eta_table()):
            return all(L1.sets[bwd(y)] == L2.sets[y] for y in range(L2.size))
    return True


def preimage_lift(f: PosetMap, U_P: JoinSpec, U_Q: JoinSpec,
                  dom: Optional[IdealLattice] = None, cod: Optional[IdealLattice] = None) -> LatticeMap:
    """f⁻¹: I_{U_Q} → I_{U_P}，D ↦ f⁻¹(D)；f 连续时它是 f⁺ 的右伴随

    Raises:
        PreconditionError: f 不连续
    """
    _check_owner(f, U_P, U_Q)
    if not continuity_check(f, U_P, U_Q):
        raise PreconditionError("map is not continuous: some preimage of an ideal is not an ideal")
    dom = dom if dom is not None else ideal_lattice(U_P)
    cod = cod if cod is not None else ideal_lattice(U_Q)
    return LatticeMap(cod, dom, tuple(dom.index_of(f.preimage_mask(D)) for D in cod.sets))


def embedding_check(f: PosetMap, U_P: JoinSpec, U_Q: JoinSpec,
                    dom: Optional[IdealLattice] = None, cod: Optional[IdealLattice] = None) -> bool:
    """连续的 f 上，逐对扫描得到的“f⁺ 是序嵌入”与 f⁻¹(f⁺(C)) = C 对每个 C 成立一致

    f 是序嵌入并不保证 f⁺ 是序嵌入，这里只比较两种判定。
    """
    lifted = lift(f, U_P, U_Q, dom=dom, cod=cod)
    back = preimage_lift(f, U_P, U_Q, dom=lifted.dom, cod=lifted.cod)
    scan = lifted.is_order_embedding()
    retract = all(back(lifted(C)) == C for C in range(lifted.dom.size))
    if scan != retract:
        logger.info(f"order-embedding scan gives {scan}, preimage test gives {retract}")
    return scan == retract
