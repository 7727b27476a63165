import logging
from dataclasses import dataclass
from fractions import Fraction

from ..action.subgroup import canonical_class_rep
from ..algebra.monomials import monomial_count
from .nearest import min_pairing, nearest_point
from .state import state_degree_d, state_degree_dD

log = logging.getLogger(__name__)


def tau(delta_squared, r, D):
    """Squared form of tau(delta, D) = |M_D| delta."""
    if D < 0:
        raise ValueError(f"The shift D must be nonnegative, got {D}")
    return monomial_count(r, D) ** 2 * Fraction(delta_squared)


@dataclass(frozen=True)
class Theorem1Report:
    """
    Comparison of the degree-d and degree-(d+D) analyses of one polynomial.

    `precondition_met` is False when f is not torus-unstable in the current
    coordinates; the identities are still evaluated and reported.
    """

    D: int
    low: object
    high: object
    expected_delta_squared: Fraction
    precondition_met: bool
    delta_holds: bool
    class_holds: bool

    @property
    def passed(self):
        return self.delta_holds and self.class_holds

    @property
    def low_class(self):
        return canonical_class_rep(self.low.lam) if self.low.lam is not None else None

    @property
    def high_class(self):
        return canonical_class_rep(self.high.lam) if self.high.lam is not None else None


def verify_theorem1(f, D, cap):
    """
    Check delta^2_{d+D} == C(r+D, r)^2 delta^2_d and equality of the canonical
    lambda classes for f in its current coordinates.

    Raises:
        CapExceededError: the degree-(d+D) minor enumeration exceeds `cap`.
    """
    low = nearest_point(state_degree_d(f))
    high = nearest_point(state_degree_dD(f, D, cap))
    expected = tau(low.delta_squared, f.r, D)
    low_class = canonical_class_rep(low.lam) if low.lam is not None else None
    high_class = canonical_class_rep(high.lam) if high.lam is not None else None
    report = Theorem1Report(
        D=D,
        low=low,
        high=high,
        expected_delta_squared=expected,
        precondition_met=low.is_unstable,
        delta_holds=high.delta_squared == expected,
        class_holds=low_class == high_class,
    )
    log.info(
        "Degree comparison for D=%d: delta^2 %s -> %s (expected %s), classes %s / %s",
        D, low.delta_squared, high.delta_squared, expected, low_class, high_class,
    )
    return report


def check_min_scaling(f, D, gamma, cap):
    """
    The per-weight identity behind the degree comparison:
    min over the degree-(d+D) state of <gamma, m - xi> equals |M_D| times the
    same minimum at degree d, for an SL-normalized gamma.
    """
    low = min_pairing(state_degree_d(f), gamma)
    high = min_pairing(state_degree_dD(f, D, cap), gamma)
    return high == monomial_count(f.r, D) * low
