"""理想格与框架判定模块"""

from joinframes.frames.distributivity import (
    birkhoff_check,
    distributivity_mk,
    distributivity_witness,
    find_pentagon,
    is_distributive,
    is_frame,
    is_modular,
    join_irreducibles,
    modularity_witness,
)
from joinframes.frames.ideals import IdealLattice, ideal_lattice
from joinframes.frames.frame_generating import (
    FrameGenReport,
    carrow_check,
    cunique_jset,
    descent_check,
    is_frame_generating,
    meet_distribution_applies,
    strong_descent_check,
    universal_extension,
    verify_eta,
)

__all__ = [
    "IdealLattice",
    "ideal_lattice",
    "is_distributive",
    "is_modular",
    "modularity_witness",
    "is_frame",
    "distributivity_witness",
    "find_pentagon",
    "join_irreducibles",
    "birkhoff_check",
    "distributivity_mk",
    "FrameGenReport",
    "is_frame_generating",
    "descent_check",
    "strong_descent_check",
    "meet_distribution_applies",
    "verify_eta",
    "universal_extension",
    "cunique_jset",
    "carrow_check",
]
