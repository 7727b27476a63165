import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .. import linalg
from ..action.subgroup import OneParamSubgroup, norm_squared, pairing, primitive

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolytopeAnalysis:
    """
    Nearest point h of the state polytope to the barycenter xi, with the
    certificate data needed to re-check it exactly.

    Attributes:
        state (StateSet): the analysed state.
        center (tuple): xi.
        nearest (tuple): h.
        delta_squared (Fraction): |Delta|^2 = ||h - xi||^2.
        mu (Fraction): min over the state of <lam, m>; 0 when delta_squared is 0.
        lam (OneParamSubgroup or None): primitive(h - xi), None when h == xi.
        hull_weights (dict): state point -> convex weight, summing to 1.
    """

    state: object
    center: tuple
    nearest: tuple
    delta_squared: Fraction
    mu: Fraction
    lam: Optional[OneParamSubgroup]
    hull_weights: dict = field(compare=False)

    @property
    def is_unstable(self):
        return self.delta_squared > 0


class SignedSquare(NamedTuple):
    """A signed value v stored as (sign(v), v^2) so comparisons stay rational."""

    sign: int
    square: Fraction

    @property
    def value(self):
        return self.sign * self.square


def _affine_minimizer(vectors, corral):
    """Weights (summing to 1) of the point of minimum norm in the affine hull of the corral."""
    k = len(corral)
    gram = [[linalg.dot(vectors[a], vectors[b]) for b in corral] + [Fraction(1)] for a in corral]
    gram.append([Fraction(1)] * k + [Fraction(0)])
    rhs = [Fraction(0)] * k + [Fraction(1)]
    solution = linalg.solve(gram, rhs)
    if solution is None:
        raise ArithmeticError(f"Corral {corral} is affinely dependent")
    return dict(zip(corral, solution[:k]))


def _combine(vectors, weights):
    n = len(next(iter(vectors)))
    x = [Fraction(0)] * n
    for i, w in weights.items():
        if w:
            for c in range(n):
                x[c] += w * vectors[i][c]
    return x


def nearest_point(state):
    """
    Exact minimum-norm point of the state polytope relative to its barycenter.

    Runs Wolfe's corral algorithm over Fractions: the stopping test
    <x, p> >= <x, x> for every point p is exact, so the returned h carries a
    supporting-hyperplane certificate. Ties are broken by the canonical
    monomial order of the state points.
    """
    points = state.sorted_points()
    xi = state.center
    vectors = [linalg.sub(m, xi) for m in points]

    start = min(range(len(vectors)), key=lambda i: (linalg.l2_sqr(vectors[i]), i))
    corral = [start]
    weights = {start: Fraction(1)}
    x = list(vectors[start])
    major = 0

    while any(x):
        major += 1
        xx = linalg.l2_sqr(x)
        j = min(range(len(vectors)), key=lambda i: (linalg.dot(x, vectors[i]), i))
        if linalg.dot(x, vectors[j]) >= xx:
            break
        if j in weights:
            log.warning("Point %s re-entered the corral; stopping", tuple(points[j]))
            break
        corral.append(j)
        weights[j] = Fraction(0)

        while True:
            alpha = _affine_minimizer(vectors, corral)
            if all(a > 0 for a in alpha.values()):
                weights = alpha
                break
            theta = min(
                (weights[i] / (weights[i] - alpha[i]) if weights[i] != alpha[i] else Fraction(0))
                for i in corral
                if alpha[i] <= 0
            )
            weights = {i: theta * alpha[i] + (1 - theta) * weights[i] for i in corral}
            corral = [i for i in corral if weights[i] > 0]
            weights = {i: weights[i] for i in corral}
        x = _combine(vectors, weights)

    log.debug("Nearest point found after %d major cycles over %d points", major, len(points))
    delta_squared = linalg.l2_sqr(x)
    h = tuple(linalg.add(xi, x))
    if delta_squared > 0:
        lam = primitive(x)
        mu_value = min(pairing(lam, m) for m in points)
    else:
        lam = None
        mu_value = Fraction(0)
    return PolytopeAnalysis(
        state=state,
        center=tuple(xi),
        nearest=h,
        delta_squared=delta_squared,
        mu=mu_value,
        lam=lam,
        hull_weights={points[i]: w for i, w in sorted(weights.items())},
    )


def min_pairing(state, gamma):
    """min over the state of <gamma, m - xi>."""
    xi = state.center
    return min(pairing(gamma, linalg.sub(m, xi)) for m in state.points)


def maxmin_delta(state, candidates):
    """
    max over candidate lambdas of (min over the state of <lambda, m - xi>) / ||lambda||.

    Returns:
        SignedSquare: the maximum as (sign, value^2).
    """
    if not candidates:
        raise ValueError("maxmin_delta needs at least one candidate.")
    best = None
    for lam in candidates:
        v = min_pairing(state, lam)
        sign = (v > 0) - (v < 0)
        value = SignedSquare(sign, v * v / norm_squared(lam))
        if best is None or value.value > best.value:
            best = value
    return best


def verify_certificate(analysis):
    """Re-check every invariant of a PolytopeAnalysis with exact arithmetic."""
    state = analysis.state
    weights = analysis.hull_weights
    if any(w < 0 for w in weights.values()) or sum(weights.values()) != 1:
        return False
    if any(m not in state.points for m in weights):
        return False
    h = _combine({m: list(m) for m in weights}, weights)
    if tuple(h) != tuple(analysis.nearest):
        return False
    direction = linalg.sub(analysis.nearest, analysis.center)
    if linalg.l2_sqr(direction) != analysis.delta_squared:
        return False
    if any(linalg.dot(direction, linalg.sub(m, analysis.nearest)) < 0 for m in state.points):
        return False
    if analysis.delta_squared == 0:
        return analysis.lam is None
    if analysis.lam != primitive(direction):
        return False
    return analysis.mu == min(pairing(analysis.lam, m) for m in state.points)
