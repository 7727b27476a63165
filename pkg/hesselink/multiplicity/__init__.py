from .bounds import BoundsReport, check_singular_if_unstable, hesselink_bounds, is_sharp_class
from .points import (
    MultiplicityReport,
    check_firststep,
    coordinate_points,
    is_singular_point,
    max_multiplicity,
    multiplicity_at,
)
