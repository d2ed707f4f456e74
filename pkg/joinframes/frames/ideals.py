"""U-理想格 I_U 的枚举"""

import logging
from typing import List, Optional

from joinframes.config import check_cap, get_limits
from joinframes.model.lattice import ClosedSetLattice
from joinframes.spec.joinspec import JoinSpec

logger = logging.getLogger(__name__)


def ideal_masks(U: JoinSpec, cap: Optional[int] = None) -> List[int]:
    """按字典序（lectic 序）枚举全部 U-理想

    NextClosure：从 Γ_U(∅) 出发，每步从高位向低位尝试加入元素 i，
    闭包后若没有引入比 i 更低的新元素就接受。
    """
    if cap is None:
        cap = get_limits().max_ideals
    n = U.owner.n
    full = U.owner.full_mask
    current = U.gamma_mask(0)
    found = [current]
    while current != full:
        for i in reversed(range(n)):
            bit = 1 << i
            if current & bit:
                current &= ~bit
                continue
            closed = U.gamma_mask(current | bit)
            if (closed & ~current) & (bit - 1) == 0:
                current = closed
                break
        found.append(current)
        check_cap("ideal enumeration", len(found), cap)
    return found


class IdealLattice(ClosedSetLattice):
    """U-理想按包含序构成的完备格

    交为交集，并为 Γ_U(C ∪ D)；顶为 P，底为 Γ_U(∅)。
    """

    def __init__(self, spec: JoinSpec, cap: Optional[int] = None):
        self.spec = spec
        masks = ideal_masks(spec, cap)
        super().__init__(spec.owner, masks, spec.gamma_mask, spec.name)
        logger.debug(f"ideal lattice of {spec.name or 'spec'}: {self.size} ideals")


def ideal_lattice(U: JoinSpec, cap: Optional[int] = None) -> IdealLattice:
    return IdealLattice(U, cap)
