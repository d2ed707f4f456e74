"""连接规格模块"""

from joinframes.spec.joinspec import (
    JoinSpec,
    bp,
    bp_plus,
    bp_plus_member,
    gamma,
    in_uplus,
    is_ideal,
    make_joinspec,
    radius,
    restrict_spec,
    spec_intersection,
    spec_union,
    u_alpha,
    u_infty,
    u_max,
    uplus,
    upsilon,
    upsilon_bruteforce,
)

__all__ = [
    "JoinSpec",
    "make_joinspec",
    "u_alpha",
    "u_infty",
    "u_max",
    "radius",
    "restrict_spec",
    "is_ideal",
    "gamma",
    "in_uplus",
    "uplus",
    "upsilon",
    "upsilon_bruteforce",
    "bp",
    "bp_plus",
    "bp_plus_member",
    "spec_union",
    "spec_intersection",
]
