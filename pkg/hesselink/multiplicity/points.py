import logging
from dataclasses import dataclass

import sympy

from ..action.group import ProjectivePoint, act
from ..errors import DimensionMismatchError
from ..search.moves import move_point_to_e

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplicityReport:
    """
    Multiplicity n of V(f) at a point.

    Attributes:
        point (ProjectivePoint): the point p.
        value (int): n, between 0 and d.
        moved_polynomial (HomogeneousPolynomial): f after moving p to e.
    """

    point: ProjectivePoint
    value: int
    moved_polynomial: object

    @property
    def on_hypersurface(self):
        return self.value >= 1

    @property
    def is_singular(self):
        return self.value >= 2


def coordinate_points(r):
    return [ProjectivePoint.coordinate(i, r + 1) for i in range(r + 1)]


def _as_point(p):
    return p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)


def multiplicity_at(f, p):
    """
    n = d - (largest x_0-exponent in the support of f moved so that p sits at e).

    That is the degree of the lowest homogeneous part of f in the affine chart
    around p, so n is 0 off V(f) and at least 2 at singular points.
    """
    p = _as_point(p)
    if len(p) != f.r + 1:
        raise DimensionMismatchError(f"Point {p!r} does not lie in P^{f.r}")
    moved = act(move_point_to_e(p), f)
    return MultiplicityReport(point=p, value=f.d - moved.max_exponent(0), moved_polynomial=moved)


def max_multiplicity(f, candidates=()):
    """
    The largest multiplicity over the coordinate points and `candidates`.

    Only finitely many points are checked, so the value is a lower bound on
    n_X unless a worst point is among them. Ties keep the first point, with
    coordinate points coming first.
    """
    best = None
    seen = set()
    for p in coordinate_points(f.r) + [_as_point(p) for p in candidates]:
        if p in seen:
            continue
        seen.add(p)
        report = multiplicity_at(f, p)
        log.debug("Multiplicity %d at %r", report.value, p)
        if best is None or report.value > best.value:
            best = report
    return best


def check_firststep(f):
    """
    With n the multiplicity at e: no support monomial of f has x_0-exponent
    above d - n, and some monomial has x_0-exponent exactly d - n.
    """
    n = multiplicity_at(f, ProjectivePoint.coordinate(0, f.r + 1)).value
    exponents = [m[0] for m in f.terms]
    return all(a <= f.d - n for a in exponents) and (f.d - n) in exponents


def to_sympy(f):
    """f as a sympy expression in the symbols x0, ..., xr."""
    xs = sympy.symbols(f"x0:{f.r + 1}")
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for x, a in zip(xs, m):
            term *= x**a
        expr += term
    return expr, xs


def is_singular_point(f, p):
    """p lies on V(f) and every partial derivative of f vanishes at p."""
    p = _as_point(p)
    if len(p) != f.r + 1:
        raise DimensionMismatchError(f"Point {p!r} does not lie in P^{f.r}")
    expr, xs = to_sympy(f)
    values = {x: sympy.Rational(c.numerator, c.denominator) for x, c in zip(xs, p)}
    if expr.subs(values) != 0:
        return False
    return all(sympy.diff(expr, x).subs(values) == 0 for x in xs)
