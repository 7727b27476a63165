import functools
from itertools import combinations
from math import comb


class ExponentVector(tuple):
    """
    A monomial x_0^{a_0}...x_r^{a_r} of S = k[x_0, ..., x_r], stored as its
    exponent tuple. The same tuple is the torus weight of the monomial.
    """

    def __new__(cls, exponents):
        exponents = tuple(exponents)
        for a in exponents:
            if not isinstance(a, int) or isinstance(a, bool) or a < 0:
                raise ValueError(f"Exponents must be nonnegative integers, got {exponents}")
        if not exponents:
            raise ValueError("An exponent vector needs at least one coordinate.")
        return super().__new__(cls, exponents)

    @property
    def degree(self):
        return sum(self)

    @property
    def r(self):
        return len(self) - 1

    def mul(self, other):
        """Exponent vector of the product of two monomials."""
        if len(other) != len(self):
            raise ValueError("Monomials live in different polynomial rings.")
        return ExponentVector(a + b for a, b in zip(self, other))

    def __repr__(self):
        return f"ExponentVector({tuple(self)})"


def monomial_key(m):
    """Sort key of the canonical order: graded lex with x_r most significant."""
    return (sum(m),) + tuple(reversed(m))


def enumerate_monomials(r, D, order=None):
    """
    Enumerate all C(r+D, r) monomials of degree D in r+1 variables.

    Args:
        r (int): dimension of the ambient projective space.
        D (int): degree.
        order (callable, optional): comparison function cmp(m, m') used
            instead of the canonical order, e.g. the <_λ order.

    Returns:
        list of ExponentVector: ascending in the requested order.
    """
    if r < 1 or D < 0:
        raise ValueError(f"Need r >= 1 and D >= 0, got r={r}, D={D}")
    n = r + 1
    # stars and bars: bar positions among D + r slots
    monomials = []
    for bars in combinations(range(D + r), r):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(D + r - prev - 1)
        monomials.append(ExponentVector(exps))
    assert len(monomials) == comb(r + D, r) and all(len(m) == n for m in monomials)
    if order is None:
        monomials.sort(key=monomial_key)
    else:
        monomials.sort(key=functools.cmp_to_key(order))
    return monomials


def monomial_count(r, D):
    """|M_D|, the number of monomials of degree D in r+1 variables."""
    return comb(r + D, r)
