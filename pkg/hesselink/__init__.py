# Main classes
from .algebra import HomogeneousPolynomial, HilbertData, parse_polynomial, serialize_polynomial
from .action import GroupElement, OneParamSubgroup, ProjectivePoint, act, act_point
from .polytope import PolytopeAnalysis, StateSet, nearest_point, state_degree_d, state_degree_dD
from .polytope import Theorem1Report, verify_theorem1
from .search import SearchConfig, SemistableVerdict, StratumLabel, classify
from .multiplicity import BoundsReport, MultiplicityReport, hesselink_bounds, max_multiplicity
from .multiplicity import multiplicity_at
from .report import AnalysisReport, validate_report

# Support classes
from .search import CandidateFinder
from .errors import (
    CapExceededError,
    HesselinkError,
    HypothesisNotMetError,
    NonHomogeneousError,
    PolynomialParseError,
)
