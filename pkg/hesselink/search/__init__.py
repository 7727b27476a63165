from .candidates import CandidateFinder
from .classify import classify, evaluate_candidate
from .config import SearchConfig
from .labels import SEMISTABLE_MESSAGE, SemistableVerdict, StratumLabel, verify_label
from .moves import (
    check_lower_triangular_invariance,
    destabilize_at_point,
    move_point_to_e,
    torus_analysis,
)
