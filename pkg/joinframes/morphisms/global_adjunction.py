"""自由框架函子 F 与遗忘函子 U 之间的伴随 F ⊣ U

每个偏序集取 U_max 方案（全部存在的并，P 有底元时含 ∅）。
单位 η_P: p ↦ p↓，余单位 ε_L: C ↦ ⋁C。
"""

import logging
from typing import Optional, Sequence, Tuple

from joinframes.errors import PreconditionError
from joinframes.frames.frame_generating import upsilon_witness
from joinframes.frames.ideals import IdealLattice, ideal_lattice
from joinframes.model.lattice import FiniteLattice
from joinframes.model.maps import LatticeMap, PosetMap, compose, identity_map
from joinframes.model.poset import Poset, bits
from joinframes.morphisms.lifts import is_u_morphism, lift
from joinframes.spec.joinspec import u_max

logger = logging.getLogger(__name__)


def free_frame(P: Poset) -> IdealLattice:
    """F(P) = I_{U_max(P)}

    Raises:
        PreconditionError: U_max(P) 不是框架生成的
    """
    U = u_max(P)
    if upsilon_witness(U) is not None:
        raise PreconditionError("the all-joins specification of the poset is not frame-generating")
    return ideal_lattice(U)


def unit(P: Poset, FP: IdealLattice) -> PosetMap:
    """η_P: P → U(F(P))"""
    return PosetMap(P, FP.poset, FP.eta_table())


def counit(L: FiniteLattice) -> LatticeMap:
    """ε_L: F(U(L)) → L"""
    ideals = ideal_lattice(u_max(L.poset))
    return LatticeMap(ideals, L, tuple(L.join_all(bits(C)) for C in ideals.sets))


def triangle_identities(P: Poset) -> Tuple[bool, bool]:
    """返回 (ε_{F(P)} ∘ F(η_P) = id, U(ε_L) ∘ η_{U(L)} = id)，其中 L = F(P)"""
    FP = free_frame(P)
    eta = unit(P, FP)
    eps = counit(FP)
    F_eta = lift(eta, u_max(P), u_max(FP.poset), dom=FP, cod=eps.dom)
    first = eps.compose(F_eta).assignment == tuple(range(FP.size))
    if not first:
        logger.info("ε ∘ F(η) is not the identity on the free frame")

    eta_UL = PosetMap(FP.poset, eps.dom.poset, eps.dom.eta_table())
    U_eps = PosetMap(eps.dom.poset, FP.poset, eps.assignment)
    second = compose(U_eps, eta_UL) == identity_map(FP.poset)
    if not second:
        logger.info("U(ε) ∘ η is not the identity on the underlying poset")
    return first, second


def naturality_check(f: PosetMap, FP: Optional[IdealLattice] = None) -> bool:
    """f⁺ ∘ η_P = η_Q ∘ f"""
    P, Q = f.dom, f.cod
    FP = FP if FP is not None else free_frame(P)
    FQ = free_frame(Q)
    if not is_u_morphism(f, u_max(P)):
        raise PreconditionError("map is not a morphism of the all-joins scheme")
    f_plus = lift(f, u_max(P), u_max(Q), dom=FP, cod=FQ)
    for p in range(P.n):
        if f_plus(FP.eta(p)) != FQ.eta(f(p)):
            logger.info(f"naturality fails at {P.labels[p]}")
            return False
    return True


def global_adjunction_check(P: Poset, embeddings: Sequence[PosetMap] = ()) -> bool:
    """在一个实例上检查 F ⊣ U 的三角恒等式、余单位保并以及 η 的自然性

    Args:
        P: 偏序集，其 U_max 必须是框架生成的
        embeddings: 以 P 为定义域的若干映射，用于自然性方块

    Returns:
        全部检查通过时为 True
    """
    FP = free_frame(P)
    first, second = triangle_identities(P)
    if not (first and second):
        return False
    if not counit(FP).preserves_joins():
        logger.info("counit of the free frame does not preserve joins")
        return False
    for f in embeddings:
        if f.dom != P:
            raise PreconditionError("naturality maps must start at the checked poset")
        if not naturality_check(f, FP):
            return False
    return True
