from dataclasses import dataclass
from fractions import Fraction

from ..action.subgroup import OneParamSubgroup, canonical_class_rep, norm_squared, primitive
from ..errors import HypothesisNotMetError


@dataclass(frozen=True)
class BoundsReport:
    """
    Two-sided bound lower <= n_X <= upper on the maximal multiplicity of an
    unstable hypersurface, written with mu so it stays rational:
    lower = (mu - a d)/(b - a), upper = r d/(r+1) - a mu/|lambda|^2.
    """

    lower: Fraction
    upper: Fraction
    lam: OneParamSubgroup
    mu: Fraction
    a: int
    b: int
    d: int
    r: int

    def contains(self, n):
        return self.lower <= n <= self.upper

    @property
    def is_sharp(self):
        return self.lower == self.upper


def hesselink_bounds(label, d, r):
    lam = OneParamSubgroup(label.witness_lambda)
    if label.mu <= 0:
        raise HypothesisNotMetError(f"Bounds need an unstable label, got mu={label.mu}")
    if not lam.is_sl_normalized:
        raise HypothesisNotMetError(f"lambda={tuple(lam)} does not have weight sum 0")
    a, b = lam.min_weight, lam.max_weight
    mu_value = Fraction(label.mu)
    return BoundsReport(
        lower=(mu_value - a * d) / (b - a),
        upper=Fraction(r * d, r + 1) - a * mu_value / norm_squared(lam),
        lam=lam,
        mu=mu_value,
        a=a,
        b=b,
        d=d,
        r=r,
    )


def check_singular_if_unstable(label, d, r):
    """
    True iff the lower bound exceeds d/(r+1), which forces a point of
    multiplicity at least 2 once d >= r+1.

    Raises:
        HypothesisNotMetError: d < r + 1.
    """
    if d < r + 1:
        raise HypothesisNotMetError(f"Needs d >= r+1, got d={d}, r={r}")
    return hesselink_bounds(label, d, r).lower > Fraction(d, r + 1)


def is_sharp_class(lam):
    """
    lambda is a positive multiple of a permutation of (1, ..., 1, -r), the only
    class with lower == upper for every mu. On (r, -1, ..., -1) the bounds meet
    only when mu = r d.
    """
    rep = tuple(canonical_class_rep(primitive(lam)))
    r = len(rep) - 1
    return rep == (1,) * r + (-r,)
