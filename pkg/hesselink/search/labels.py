from dataclasses import dataclass, field
from fractions import Fraction

from ..action.group import act
from ..action.subgroup import canonical_class_rep, mu, norm_squared

SEMISTABLE_MESSAGE = "no destabilizing 1-PS found within budget"


@dataclass(frozen=True)
class StratumLabel:
    """
    Certified instability label ([lambda], delta) of a hypersurface.

    The pair (witness_g, witness_lambda) is the certificate: mu is the weight
    of act(witness_g, f) against witness_lambda, and mu > 0 proves f unstable.
    delta_squared is a lower bound on the true instability when the search
    did not reach the optimal coordinates.
    """

    lambda_class: tuple
    delta_squared: Fraction
    mu: Fraction
    witness_g: object
    witness_lambda: tuple
    source: str = field(default="", compare=False)

    def sort_key(self):
        """Smaller is better: larger delta^2, then smaller class, then witness text."""
        return (-self.delta_squared, tuple(self.lambda_class), self.witness_g.serialize())


@dataclass(frozen=True)
class SemistableVerdict:
    """No positive delta^2 was found. This is not a proof of semistability."""

    candidates_evaluated: int
    message: str = SEMISTABLE_MESSAGE

    @property
    def delta_squared(self):
        return Fraction(0)


def verify_label(f, label):
    """Re-verify a label against f, independently of how the search found it."""
    value = mu(act(label.witness_g, f), label.witness_lambda)
    if value <= 0 or value != label.mu:
        return False
    if label.delta_squared != value * value / norm_squared(label.witness_lambda):
        return False
    return tuple(canonical_class_rep(label.witness_lambda)) == tuple(label.lambda_class)
