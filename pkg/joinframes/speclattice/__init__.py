"""规格格模块：U⁻、JF / JF⁺ 与闭包表示"""

from joinframes.speclattice.closure import (
    ClosureRepr,
    closure_from_completion,
    closure_leq,
    lsame_check,
    parrow_frame_check,
    parrow_map,
    roundtrip_check,
    spec_from_closure,
)
from joinframes.speclattice.pruning import removal_recheck, uminus, uminus_sequential
from joinframes.speclattice.jf import (
    completion_terminal_spec,
    is_maximal,
    jf_bottoms,
    jf_join,
    jf_meet,
    jf_top,
    jfplus_join,
    jfplus_meet,
    maximality_witness,
    reflection_check,
    terminal_object_check,
    terminal_samples,
)

__all__ = [
    "ClosureRepr",
    "closure_from_completion",
    "closure_leq",
    "lsame_check",
    "parrow_map",
    "parrow_frame_check",
    "roundtrip_check",
    "spec_from_closure",
    "uminus",
    "uminus_sequential",
    "removal_recheck",
    "jf_join",
    "jf_meet",
    "jfplus_join",
    "jfplus_meet",
    "jf_top",
    "jf_bottoms",
    "is_maximal",
    "maximality_witness",
    "reflection_check",
    "terminal_object_check",
    "terminal_samples",
    "completion_terminal_spec",
]
