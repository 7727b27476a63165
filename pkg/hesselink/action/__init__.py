from .group import GroupElement, ProjectivePoint, act, act_point
from .subgroup import (
    OneParamSubgroup,
    canonical_class_rep,
    conjugate_by_permutation,
    lambda_order,
    monomial_cmp,
    mu,
    norm_squared,
    pairing,
    primitive,
    sorting_permutation,
)
