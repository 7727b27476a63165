import random

import pytest

from hesselink.algebra import HomogeneousPolynomial, parse_polynomial


@pytest.fixture
def cusp():
    return parse_polynomial("x1^2*x2 - x0^3", 2)


@pytest.fixture
def quartic_x0():
    return parse_polynomial("x0^4", 3)


@pytest.fixture
def fermat_cubic():
    return parse_polynomial("x0^3 + x1^3 + x2^3", 2)


@pytest.fixture
def fermat_conic():
    return parse_polynomial("x0^2 + x1^2 + x2^2", 2)


def _random_exponents(rng, r, d):
    cuts = sorted(rng.randint(0, d) for _ in range(r))
    bounds = [0] + cuts + [d]
    return tuple(bounds[i + 1] - bounds[i] for i in range(r + 1))


@pytest.fixture
def monomial_corpus():
    """50 monomials with r in 1..3 and degree in 2..5, from a fixed seed."""
    rng = random.Random(2024)
    corpus = []
    for _ in range(50):
        r = rng.randint(1, 3)
        d = rng.randint(2, 5)
        corpus.append(HomogeneousPolynomial.monomial(_random_exponents(rng, r, d)))
    return corpus


@pytest.fixture
def sparse_corpus():
    """50 random sparse polynomials with small integer coefficients."""
    rng = random.Random(7)
    corpus = []
    for _ in range(50):
        r = rng.randint(1, 3)
        d = rng.randint(1, 5)
        terms = {}
        for _ in range(rng.randint(1, 4)):
            terms[_random_exponents(rng, r, d)] = rng.choice([-3, -2, -1, 1, 2, 3])
        corpus.append(HomogeneousPolynomial(r, terms))
    return corpus
