from fractions import Fraction

from .. import linalg
from ..algebra.polynomial import HomogeneousPolynomial, poly_mul_raw
from ..errors import DimensionMismatchError, SingularMatrixError, ZeroVectorError


class GroupElement:
    """
    An invertible (r+1)x(r+1) rational matrix g in GL_{r+1}.

    Points are row vectors. g acts on polynomials by (g.f)(v) = f(v g), so the
    variable x_j is replaced by the linear form sum_i g[i][j] x_i.
    """

    __slots__ = ("rows", "_det")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatchError("A group element needs a square matrix.")
        det = linalg.determinant(rows)
        if det == 0:
            raise SingularMatrixError(f"Matrix {self._format(rows)} is not invertible")
        self.rows = rows
        self._det = det

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, perm):
        """The permutation matrix whose row i is the unit vector e_{perm[i]}."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
        return cls([[1 if j == perm[i] else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def transposition(cls, n, i, j):
        perm = list(range(n))
        perm[i], perm[j] = perm[j], perm[i]
        return cls.permutation(perm)

    @classmethod
    def lower_triangular(cls, rows):
        g = cls(rows)
        if not g.is_lower_triangular():
            raise ValueError(f"Matrix {g.serialize()} is not lower triangular")
        return g

    @classmethod
    def random(cls, rng, n, bound):
        """Random matrix with integer entries in [-bound, bound], redrawn until invertible."""
        while True:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
            if linalg.determinant(rows) != 0:
                return cls(rows)

    @classmethod
    def random_unit_lower_triangular(cls, rng, n, bound):
        rows = [
            [1 if i == j else (rng.randint(-bound, bound) if j < i else 0) for j in range(n)]
            for i in range(n)
        ]
        return cls(rows)

    @property
    def size(self):
        return len(self.rows)

    def determinant(self):
        return self._det

    def inverse(self):
        return GroupElement(linalg.inverse(self.rows))

    def is_lower_triangular(self):
        return all(self.rows[i][j] == 0 for i in range(self.size) for j in range(i + 1, self.size))

    def __matmul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.size != self.size:
            raise DimensionMismatchError("Cannot multiply matrices of different sizes.")
        return GroupElement(linalg.matmul([list(r) for r in self.rows], [list(r) for r in other.rows]))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def serialize(self):
        """Rows separated by ';', entries by ',', every entry as p/q."""
        return self._format(self.rows)

    @staticmethod
    def _format(rows):
        return ";".join(
            ",".join(f"{x.numerator}/{x.denominator}" for x in row) for row in rows
        )

    @classmethod
    def deserialize(cls, text):
        return cls([[Fraction(x) for x in row.split(",")] for row in text.split(";")])

    def __repr__(self):
        return f"GroupElement({self.serialize()!r})"


class ProjectivePoint(tuple):
    """A point [b_0 : ... : b_r], normalized so the first nonzero coordinate is 1."""

    def __new__(cls, coords):
        coords = [Fraction(x) for x in coords]
        pivot = next((x for x in coords if x != 0), None)
        if pivot is None:
            raise ZeroVectorError("A projective point needs a nonzero coordinate.")
        return super().__new__(cls, (x / pivot for x in coords))

    @classmethod
    def coordinate(cls, i, n):
        return cls([1 if j == i else 0 for j in range(n)])

    @classmethod
    def parse(cls, text):
        """Parse comma-separated rationals such as '1, 2/3, 0'."""
        return cls([Fraction(part.strip()) for part in text.split(",")])

    @property
    def coords(self):
        return tuple(self)

    @property
    def r(self):
        return len(self) - 1

    def last_nonzero_index(self):
        return max(i for i, x in enumerate(self) if x != 0)

    def serialize(self):
        return ",".join(f"{x.numerator}/{x.denominator}" for x in self)

    def __repr__(self):
        return "[" + ":".join(str(x) for x in self) + "]"


def act(g, f):
    """
    The polynomial g.f with (g.f)(v) = f(v g).

    act(g, act(h, f)) == act(g @ h, f).
    """
    n = f.r + 1
    if g.size != n:
        raise DimensionMismatchError(f"{g.size}x{g.size} matrix acting on k[x_0..x_{f.r}]")
    unit = tuple([0] * n)
    # substitution x_j -> sum_i g[i][j] x_i
    linear_forms = []
    for j in range(n):
        form = {}
        for i in range(n):
            if g.rows[i][j] != 0:
                e = [0] * n
                e[i] = 1
                form[tuple(e)] = g.rows[i][j]
        linear_forms.append(form)

    powers = [{0: {unit: Fraction(1)}} for _ in range(n)]

    def power(j, a):
        cache = powers[j]
        if a not in cache:
            cache[a] = poly_mul_raw(power(j, a - 1), linear_forms[j])
        return cache[a]

    result = {}
    for m, c in f.terms.items():
        term = {unit: c}
        for j, a in enumerate(m):
            if a:
                term = poly_mul_raw(term, power(j, a))
        for key, value in term.items():
            result[key] = result.get(key, 0) + value
    return HomogeneousPolynomial(f.r, result)


def act_point(p, g):
    """The point p g (row vector times matrix), renormalized."""
    if len(p) != g.size:
        raise DimensionMismatchError(f"Point with {len(p)} coordinates and {g.size}x{g.size} matrix")
    image = [sum((p[i] * g.rows[i][j] for i in range(g.size)), Fraction(0)) for j in range(g.size)]
    return ProjectivePoint(image)
