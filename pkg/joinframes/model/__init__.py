"""数据模型模块"""

from joinframes.model.poset import (
    ElemSet,
    Poset,
    all_downsets,
    build_poset,
    downclose,
    join,
    meet,
    upclose,
)
from joinframes.model.lattice import ClosedSetLattice, FiniteLattice, lattice_of_closed_sets
from joinframes.model.maps import LatticeMap, PosetMap, compose, identity_map, inclusion_map, parse_assignment

__all__ = [
    "Poset",
    "ElemSet",
    "build_poset",
    "downclose",
    "upclose",
    "join",
    "meet",
    "all_downsets",
    "FiniteLattice",
    "ClosedSetLattice",
    "lattice_of_closed_sets",
    "PosetMap",
    "LatticeMap",
    "identity_map",
    "inclusion_map",
    "compose",
    "parse_assignment",
]
