import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .. import linalg
from ..algebra.hilbert import HilbertData
from ..algebra.monomials import ExponentVector, enumerate_monomials, monomial_key
from ..errors import CapExceededError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateSet:
    """
    The state of a degree-t Hilbert point: the torus weights with nonzero
    Plücker coordinate. Every weight has coordinate sum t * Q.
    """

    r: int
    t: int
    Q: int
    points: frozenset

    def __post_init__(self):
        if not self.points:
            raise ValueError("A state is never empty.")
        total = self.t * self.Q
        for m in self.points:
            if len(m) != self.r + 1 or sum(m) != total:
                raise ValueError(f"State point {tuple(m)} does not have r+1 coordinates summing to {total}")

    @property
    def center(self):
        """The barycenter xi_t = t Q / (r+1) * (1, ..., 1)."""
        c = Fraction(self.t * self.Q, self.r + 1)
        return tuple([c] * (self.r + 1))

    def sorted_points(self):
        return sorted(self.points, key=monomial_key)

    def permuted(self, perm):
        """The state of act(P_perm, f): coordinates of every point permuted."""
        return StateSet(
            self.r, self.t, self.Q, frozenset(ExponentVector(m[p] for p in perm) for m in self.points)
        )

    def __len__(self):
        return len(self.points)


def center(state):
    return state.center


def state_degree_d(f):
    """The state of [f] itself: Q(d) = 1, so the state is the support of f."""
    return StateSet(f.r, f.d, HilbertData(f.r, f.d).Q(f.d), frozenset(f.terms))


@dataclass(frozen=True)
class MultiplicationMatrix:
    """
    The |M_D| x |M_{d+D}| matrix of multiplication by f: entry (i, j) is the
    coefficient of the column monomial m_j in row_monomial_i * f.
    """

    rows: tuple
    cols: tuple
    entries: tuple

    def entry(self, i, j):
        return self.entries[i][j]

    def rank(self):
        m = [list(row) for row in self.entries]
        free_vars, _ = linalg.row_echelon(m)
        return len(self.cols) - len(free_vars)

    def nonzero_columns(self):
        return [j for j in range(len(self.cols)) if any(row[j] != 0 for row in self.entries)]


def multiplication_matrix(f, D):
    if D < 1:
        raise ValueError(f"The shift D must be at least 1, got {D}")
    rows = enumerate_monomials(f.r, D)
    cols = enumerate_monomials(f.r, f.d + D)
    index = {m: j for j, m in enumerate(cols)}
    entries = []
    for m in rows:
        row = [Fraction(0)] * len(cols)
        for mon, c in f.terms.items():
            row[index[mon.mul(m)]] = c
        entries.append(tuple(row))
    return MultiplicationMatrix(tuple(rows), tuple(cols), tuple(entries))


def state_degree_dD(f, D, cap):
    """
    The state of the degree-(d+D) Hilbert point of f, read off the nonzero
    maximal minors of the multiplication matrix.

    A column tuple contributes the weight sum of its column monomials when its
    minor is nonzero. `cap` bounds C(|M_{d+D}|, |M_D|), the number of all
    column tuples. Zero columns are then dropped, and tuples whose weight is
    already in the state are skipped.

    Raises:
        CapExceededError: the matrix has more than `cap` column tuples.
    """
    matrix = multiplication_matrix(f, D)
    k = len(matrix.rows)
    tuples = comb(len(matrix.cols), k)
    if tuples > cap:
        raise CapExceededError(tuples, cap)
    columns = matrix.nonzero_columns()
    log.debug(
        "Enumerating %d of %d column tuples of a %dx%d matrix",
        comb(len(columns), k), tuples, k, len(matrix.cols),
    )

    row_support = [frozenset(j for j in columns if matrix.entries[i][j] != 0) for i in range(k)]
    points = set()
    skipped = 0
    for chosen in combinations(columns, k):
        weight = ExponentVector(map(sum, zip(*(matrix.cols[j] for j in chosen))))
        if weight in points:
            skipped += 1
            continue
        chosen_set = set(chosen)
        if any(not (support & chosen_set) for support in row_support):
            continue
        minor = [[matrix.entries[i][j] for j in chosen] for i in range(k)]
        if linalg.determinant(minor) != 0:
            points.add(weight)
    log.debug("State of degree %d has %d points (%d tuples skipped by weight)", f.d + D, len(points), skipped)
    Q = HilbertData(f.r, f.d).Q(f.d + D)
    return StateSet(f.r, f.d + D, Q, frozenset(points))
