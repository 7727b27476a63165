from fractions import Fraction
from functools import reduce
from math import gcd

from ..algebra.monomials import monomial_key
from ..errors import DimensionMismatchError, ZeroVectorError


class OneParamSubgroup(tuple):
    """
    A one-parameter subgroup t -> diag(t^{a_0}, ..., t^{a_r}) of the diagonal
    torus, identified with its integer weight vector (a_0, ..., a_r).
    """

    def __new__(cls, weights):
        weights = tuple(weights)
        for a in weights:
            if not isinstance(a, int) or isinstance(a, bool):
                raise ValueError(f"Weights must be integers, got {weights}")
        if not any(weights):
            raise ZeroVectorError("A one-parameter subgroup needs a nonzero weight.")
        return super().__new__(cls, weights)

    @property
    def weights(self):
        return tuple(self)

    @property
    def is_sl_normalized(self):
        return sum(self) == 0

    @property
    def min_weight(self):
        return min(self)

    @property
    def max_weight(self):
        return max(self)

    def __repr__(self):
        return f"OneParamSubgroup({tuple(self)})"


def _check_lengths(lam, m):
    if len(lam) != len(m):
        raise DimensionMismatchError(
            f"Weight vector of length {len(lam)} paired with vector of length {len(m)}"
        )


def pairing(lam, m):
    """The standard pairing <eta(lambda), m> = sum a_i m_i."""
    _check_lengths(lam, m)
    return sum((Fraction(a) * x for a, x in zip(lam, m)), Fraction(0))


def norm_squared(lam):
    return Fraction(sum(a * a for a in lam))


def mu(f, lam):
    """Minimum of <lambda, m> over the support of f."""
    return min(pairing(lam, m) for m in f.terms)


def monomial_cmp(lam, m, m_prime):
    """
    Compare two monomials of equal degree in the order <_lambda.

    Returns -1, 0 or 1. Ties in weight are broken lexicographically with
    x_r as the most significant variable.
    """
    if sum(m) != sum(m_prime):
        raise ValueError("The order <_lambda compares monomials of equal degree only.")
    w, w_prime = pairing(lam, m), pairing(lam, m_prime)
    if w != w_prime:
        return -1 if w < w_prime else 1
    k, k_prime = monomial_key(m), monomial_key(m_prime)
    if k == k_prime:
        return 0
    return -1 if k < k_prime else 1


def lambda_order(lam):
    """The comparison function of <_lambda, usable with enumerate_monomials."""
    return lambda m, m_prime: monomial_cmp(lam, m, m_prime)


def conjugate_by_permutation(perm, lam):
    """
    Conjugate lambda by the permutation matrix P_perm (row i of P is e_{perm[i]}).

    The result has weights (lambda_{perm[0]}, ..., lambda_{perm[r]}), matching the
    exponent permutation that act(P_perm, f) applies to every monomial of f.
    """
    _check_lengths(lam, perm)
    return OneParamSubgroup(lam[p] for p in perm)


def canonical_class_rep(lam):
    """Weakly decreasing representative of the permutation class of lambda."""
    return OneParamSubgroup(sorted(lam, reverse=True))


def sorting_permutation(lam):
    """The permutation perm with conjugate_by_permutation(perm, lam) weakly increasing."""
    return tuple(sorted(range(len(lam)), key=lambda i: (lam[i], i)))


def primitive(v):
    """
    The unique indivisible integer vector positively proportional to v.

    Raises:
        ZeroVectorError: v is the zero vector.
    """
    v = [Fraction(x) for x in v]
    if not any(v):
        raise ZeroVectorError("Cannot take the primitive vector of zero.")
    denominator = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    ints = [int(x * denominator) for x in v]
    g = reduce(gcd, (abs(a) for a in ints))
    return OneParamSubgroup(a // g for a in ints)
