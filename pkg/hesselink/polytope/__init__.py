from .state import (
    MultiplicationMatrix,
    StateSet,
    center,
    multiplication_matrix,
    state_degree_d,
    state_degree_dD,
)
from .nearest import (
    PolytopeAnalysis,
    SignedSquare,
    maxmin_delta,
    min_pairing,
    nearest_point,
    verify_certificate,
)
from .stratification import Theorem1Report, check_min_scaling, tau, verify_theorem1
