"""框架生成规格格 JF 与极大框架生成规格格 JF⁺"""

import logging
from typing import List, Optional, Sequence, Tuple

from joinframes.errors import InvariantViolation, PreconditionError
from joinframes.frames.distributivity import is_distributive
from joinframes.frames.frame_generating import upsilon_witness
from joinframes.frames.ideals import ideal_lattice
from joinframes.model.lattice import FiniteLattice
from joinframes.model.maps import LatticeMap, PosetMap
from joinframes.model.poset import Poset, bits
from joinframes.spec.joinspec import (
    JoinSpec,
    bp,
    bp_plus,
    spec_intersection,
    spec_union,
    u_alpha,
    u_max,
    uplus,
    uplus_masks,
)
from joinframes.speclattice.closure import closure_from_completion, spec_from_closure
from joinframes.speclattice.pruning import uminus

logger = logging.getLogger(__name__)


def _label(U: JoinSpec) -> str:
    return U.name or repr(U)


def _require_frame_generating(specs: Sequence[JoinSpec]) -> None:
    for U in specs:
        if upsilon_witness(U) is not None:
            raise PreconditionError(f"{_label(U)} is not frame-generating")


def maximality_witness(U: JoinSpec) -> Optional[int]:
    """U⁺ 中第一个不在 U 里的集合"""
    return next((T for T in uplus_masks(U) if T not in U.mask_set), None)


def is_maximal(U: JoinSpec) -> bool:
    return maximality_witness(U) is None


def _require_maximal(specs: Sequence[JoinSpec]) -> None:
    for U in specs:
        if not is_maximal(U):
            raise PreconditionError(f"{_label(U)} is not maximal")


def jf_join(specs: Sequence[JoinSpec]) -> JoinSpec:
    """JF 中的并：并集"""
    _require_frame_generating(specs)
    result = spec_union(specs, "+".join(_label(U) for U in specs))
    if upsilon_witness(result) is not None:
        raise InvariantViolation("union of frame-generating specifications is not frame-generating")
    return result


def jf_meet(specs: Sequence[JoinSpec]) -> JoinSpec:
    """JF 中的交：(⋂ U_i)⁻"""
    _require_frame_generating(specs)
    return uminus(spec_intersection(specs, "&".join(_label(U) for U in specs)))


def jfplus_join(specs: Sequence[JoinSpec]) -> JoinSpec:
    """JF⁺ 中的并：(⋃ U_i)⁺"""
    _require_frame_generating(specs)
    _require_maximal(specs)
    return uplus(spec_union(specs, "+".join(_label(U) for U in specs)))


def jfplus_meet(specs: Sequence[JoinSpec]) -> JoinSpec:
    """JF⁺ 中的交：交集"""
    _require_frame_generating(specs)
    _require_maximal(specs)
    result = spec_intersection(specs, "&".join(_label(U) for U in specs))
    if upsilon_witness(result) is not None or not is_maximal(result):
        raise InvariantViolation("intersection of maximal frame-generating specifications left JF⁺")
    return result


def jf_top(P: Poset) -> JoinSpec:
    """JF 与 JF⁺ 的顶：U_max⁻"""
    return uminus(u_max(P)).renamed("top")


def jf_bottoms(P: Poset) -> Tuple[JoinSpec, JoinSpec]:
    """(B_P, B_P⁺)：分别是 JF 与 JF⁺ 的底"""
    return bp(P), bp_plus(P)


def reflection_check(P: Poset, samples: Sequence[Tuple[JoinSpec, JoinSpec]]) -> bool:
    """对每个样本 (U1 ∈ JF, U2 ∈ JF⁺) 检查 U1⁺ ⊆ U2 ⟺ U1 ⊆ U2"""
    for first, second in samples:
        if first.owner != P or second.owner != P:
            raise PreconditionError("sampled specifications belong to another poset")
        _require_frame_generating([first, second])
        _require_maximal([second])
        if uplus(first).issubset(second) != first.issubset(second):
            logger.info(f"reflection fails for {_label(first)} and {_label(second)}")
            return False
    return True


def extension_exists(U: JoinSpec, e: PosetMap, L: FiniteLattice) -> bool:
    """是否存在固定 P 的完全保并映射 I_U → L

    候选只有 C ↦ ⋁ e[C]（η[P] 在 I_U 中并稠密），所以检查它是否保并。
    """
    ideals = ideal_lattice(U)
    assignment = tuple(L.join_all(e(p) for p in bits(C)) for C in ideals.sets)
    return LatticeMap(ideals, L, assignment).preserves_joins()


def terminal_samples(P: Poset, W: JoinSpec, specs: Sequence[JoinSpec] = ()) -> List[JoinSpec]:
    """终对象检查的样本族

    固定包含 B_P、B_P⁺、W、JF 的顶与 (U_3)⁻；specs 中框架生成的规格原样加入，
    其余加入其 U⁻。
    """
    samples = [bp(P), bp_plus(P), W, jf_top(P), uminus(u_alpha(P, 3))]
    for U in specs:
        samples.append(U if upsilon_witness(U) is None else uminus(U))
    return samples


def terminal_object_check(e: PosetMap, L: FiniteLattice,
                          samples: Optional[Sequence[JoinSpec]] = None,
                          specs: Sequence[JoinSpec] = ()) -> bool:
    """W = (U_e)⁻ 极大，且对每个框架生成样本 U：映射存在 ⟺ U ⊆ W

    samples 缺省为 terminal_samples(P, W, specs)。

    Raises:
        PreconditionError: L 不是框架，e 不是连接完备化，或样本不是框架生成的
    """
    if not is_distributive(L):
        raise PreconditionError("target lattice is not a frame")
    P = e.dom
    completion_spec = spec_from_closure(closure_from_completion(e, L))
    W = uminus(completion_spec)
    if not is_maximal(W):
        logger.info("pruned completion specification is not maximal")
        return False
    if samples is None:
        samples = terminal_samples(P, W, specs)
    _require_frame_generating(samples)
    for U in samples:
        if extension_exists(U, e, L) != U.issubset(W):
            logger.info(f"terminal-object biconditional fails for {_label(U)}")
            return False
    return True


def completion_terminal_spec(e: PosetMap, L: FiniteLattice) -> JoinSpec:
    """(U_e)⁻"""
    return uminus(spec_from_closure(closure_from_completion(e, L)))


def sub_specifications(U: JoinSpec) -> List[JoinSpec]:
    """U 的全部子规格（单点集保留），仅用于小规模穷举"""
    optional = U.nontrivial_masks()
    result = []
    for choice in range(1 << len(optional)):
        keep = [S for k, S in enumerate(optional) if choice >> k & 1]
        result.append(JoinSpec(U.owner, keep))
    return result
