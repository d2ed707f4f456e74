"""态射模块：U-态射、提升 f⁺ 与伴随检查"""

from joinframes.model.maps import LatticeMap, PosetMap, compose, identity_map, inclusion_map, parse_assignment
from joinframes.morphisms.lifts import (
    adjoint_check,
    continuity_check,
    embedding_check,
    is_embedding,
    is_monotone,
    is_u_morphism,
    lift,
    monotone_maps,
    preimage_lift,
)
from joinframes.morphisms.global_adjunction import (
    counit,
    free_frame,
    global_adjunction_check,
    naturality_check,
    triangle_identities,
    unit,
)

__all__ = [
    "PosetMap",
    "LatticeMap",
    "compose",
    "identity_map",
    "inclusion_map",
    "parse_assignment",
    "is_monotone",
    "is_embedding",
    "is_u_morphism",
    "continuity_check",
    "lift",
    "preimage_lift",
    "embedding_check",
    "monotone_maps",
    "adjoint_check",
    "free_frame",
    "unit",
    "counit",
    "triangle_identities",
    "naturality_check",
    "global_adjunction_check",
]
