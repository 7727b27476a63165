from fractions import Fraction
from types import MappingProxyType

from ..errors import DimensionMismatchError, NonHomogeneousError, ZeroPolynomialError
from .monomials import ExponentVector, monomial_key


class HomogeneousPolynomial:
    """
    A nonzero homogeneous polynomial f in k[x_0, ..., x_r] with exact rational
    coefficients, the generator of the ideal of a projective hypersurface.

    Attributes:
        r (int): dimension of the ambient projective space.
        d (int): total degree.
        terms (Mapping): ExponentVector -> nonzero Fraction (read only).
    """

    __slots__ = ("r", "d", "_terms", "_hash")

    def __init__(self, r, terms):
        if r < 1:
            raise ValueError(f"The ambient dimension must be at least 1, got r={r}")
        cleaned = {}
        for m, c in dict(terms).items():
            m = m if isinstance(m, ExponentVector) else ExponentVector(m)
            if len(m) != r + 1:
                raise DimensionMismatchError(
                    f"Monomial {tuple(m)} does not have r+1={r + 1} exponents"
                )
            c = Fraction(c)
            if c != 0:
                cleaned[m] = cleaned.get(m, Fraction(0)) + c
                if cleaned[m] == 0:
                    del cleaned[m]
        if not cleaned:
            raise ZeroPolynomialError()
        degrees = {m.degree for m in cleaned}
        if len(degrees) > 1:
            raise NonHomogeneousError(degrees)
        self.r = r
        self.d = degrees.pop()
        self._terms = cleaned
        self._hash = None

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        m = ExponentVector(exponents)
        return cls(m.r, {m: coefficient})

    def support(self):
        """The exponent vectors with nonzero coefficient, in canonical order."""
        return sorted(self._terms, key=monomial_key)

    def coefficient(self, m):
        return self._terms.get(tuple(m), Fraction(0))

    def leading_coefficient(self):
        return self._terms[max(self._terms, key=monomial_key)]

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            raise ZeroPolynomialError()
        return HomogeneousPolynomial(self.r, {m: c * v for m, v in self._terms.items()})

    def normalized(self):
        """The scalar multiple whose leading coefficient is 1."""
        return self.scale(1 / self.leading_coefficient())

    def evaluate(self, point):
        if len(point) != self.r + 1:
            raise DimensionMismatchError(
                f"Point has {len(point)} coordinates, expected {self.r + 1}"
            )
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            value = c
            for x, a in zip(point, m):
                if a:
                    value *= x**a
            total += value
        return total

    def max_exponent(self, i):
        """Largest exponent of x_i over the support."""
        return max(m[i] for m in self._terms)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return self.r == other.r and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .parser import serialize_polynomial

        return f"HomogeneousPolynomial(r={self.r}, {serialize_polynomial(self)!r})"


def multiply(f, m):
    """
    Multiply f by the monomial m.

    The coefficient of m' in the product is the coefficient of m' - m in f,
    so the result has degree d + deg(m).
    """
    m = m if isinstance(m, ExponentVector) else ExponentVector(m)
    if len(m) != f.r + 1:
        raise DimensionMismatchError(
            f"Monomial {tuple(m)} does not live in k[x_0..x_{f.r}]"
        )
    return HomogeneousPolynomial(f.r, {mon.mul(m): c for mon, c in f.terms.items()})


def poly_mul_raw(p, q):
    """Product of two polynomials given as raw dicts tuple -> Fraction."""
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            out[key] = out.get(key, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}
