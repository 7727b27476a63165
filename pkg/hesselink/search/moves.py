import logging

from ..action.group import GroupElement, ProjectivePoint, act
from ..errors import HypothesisNotMetError
from ..polytope.nearest import nearest_point
from ..polytope.state import state_degree_d

log = logging.getLogger(__name__)


def move_point_to_e(y):
    """
    A group element g = q l with act_point(e, g) == y.

    l is lower triangular: it is the identity except for row j, which is the
    representative of y (j is the last nonzero coordinate of y, so that row is
    lower triangular with nonzero diagonal entry). q is the transposition of
    0 and j, so e q = e_j and e_j l = y.
    """
    y = y if isinstance(y, ProjectivePoint) else ProjectivePoint(y)
    n = len(y)
    j = y.last_nonzero_index()
    rows = [[1 if i == c else 0 for c in range(n)] for i in range(n)]
    rows[j] = list(y)
    lower = GroupElement(rows)
    q = GroupElement.transposition(n, 0, j)
    return q @ lower


def torus_analysis(f, g):
    """The torus analysis of act(g, f) at degree d."""
    return nearest_point(state_degree_d(act(g, f)))


def check_lower_triangular_invariance(f, g, lower):
    """
    For g whose torus analysis has weakly increasing lambda, check that
    act(lower @ g, f) has the same lambda and delta^2.

    Raises:
        HypothesisNotMetError: act(g, f) is torus-semistable, or its lambda is
            not weakly increasing (conjugate g by a permutation first).
    """
    if not lower.is_lower_triangular():
        raise ValueError("The perturbation must be a lower-triangular matrix.")
    before = torus_analysis(f, g)
    if before.lam is None:
        raise HypothesisNotMetError("act(g, f) is not torus-unstable; no lambda to preserve")
    if any(a > b for a, b in zip(before.lam, before.lam[1:])):
        raise HypothesisNotMetError(
            f"lambda={tuple(before.lam)} is not weakly increasing; conjugate by a permutation first"
        )
    after = torus_analysis(f, lower @ g)
    preserved = after.lam == before.lam and after.delta_squared == before.delta_squared
    if not preserved:
        log.warning(
            "Lower-triangular perturbation changed lambda %s -> %s", tuple(before.lam), after.lam
        )
    return preserved


def destabilize_at_point(f, p):
    """Torus analysis of f after moving p to e = [1:0:...:0]."""
    return torus_analysis(f, move_point_to_e(p))
