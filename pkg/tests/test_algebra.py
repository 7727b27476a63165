import random
from fractions import Fraction

import pytest

from hesselink.algebra import (
    ExponentVector,
    HilbertData,
    HomogeneousPolynomial,
    enumerate_monomials,
    hilbert_values,
    monomial_count,
    multiply,
    parse_polynomial,
    serialize_polynomial,
)
from hesselink.errors import (
    BelowGotzmannError,
    DimensionMismatchError,
    NonHomogeneousError,
    PolynomialParseError,
    PolynomialSyntaxError,
    UnknownVariableError,
    ZeroPolynomialError,
)


def test_parse_cusp(cusp):
    assert cusp.r == 2
    assert cusp.d == 3
    assert dict(cusp.terms) == {(0, 2, 1): Fraction(1), (3, 0, 0): Fraction(-1)}


@pytest.mark.parametrize(
    "text, r, expected",
    [
        ("x1^2*x2 - x0^3", 2, "x1^2*x2 - x0^3"),
        ("3/2*x0^2", 1, "3/2*x0^2"),
        ("x0*x1 + x1*x0", 1, "2*x0*x1"),
        ("-x0^2 + x1^2", 1, "x1^2 - x0^2"),
        ("x0^2 − x1^2", 1, "-x1^2 + x0^2"),
    ],
)
def test_serialize_canonical_text(text, r, expected):
    f = parse_polynomial(text, r)
    assert serialize_polynomial(f) == expected
    assert parse_polynomial(serialize_polynomial(f), r) == f


@pytest.mark.parametrize(
    "text, r, error",
    [
        ("x0^2 + x1", 2, NonHomogeneousError),
        ("x3^2", 2, UnknownVariableError),
        ("x0 - x0", 1, ZeroPolynomialError),
        ("x0 +", 1, PolynomialSyntaxError),
        ("2x0", 1, PolynomialSyntaxError),
        ("", 1, PolynomialSyntaxError),
        ("1/0*x0", 1, PolynomialSyntaxError),
    ],
)
def test_parse_errors(text, r, error):
    with pytest.raises(error):
        parse_polynomial(text, r)


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_polynomial("x0 + x1^2", 1)
    assert issubclass(NonHomogeneousError, PolynomialParseError)


def test_polynomial_rejects_wrong_arity():
    with pytest.raises(DimensionMismatchError):
        HomogeneousPolynomial(2, {(1, 1): 1})


def test_enumerate_monomials_canonical_order():
    assert enumerate_monomials(2, 2) == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    ]


@pytest.mark.parametrize("r, D", [(1, 0), (1, 4), (2, 3), (3, 2), (4, 3)])
def test_enumerate_monomials_count(r, D):
    monomials = enumerate_monomials(r, D)
    assert len(monomials) == monomial_count(r, D)
    assert len(set(monomials)) == len(monomials)
    assert all(m.degree == D and len(m) == r + 1 for m in monomials)


def test_exponent_vector_validation():
    with pytest.raises(ValueError):
        ExponentVector((1, -1))
    assert ExponentVector((1, 0)).mul((0, 2)) == (1, 2)


def test_multiply_matches_convolution():
    f = parse_polynomial("x0 - 2*x1", 1)
    product = multiply(f, (1, 1))
    assert product == parse_polynomial("x0^2*x1 - 2*x0*x1^2", 1)
    # convolution: coefficient of m' in x^m f is the coefficient of m' - m in f
    for m, c in product.terms.items():
        assert f.coefficient((m[0] - 1, m[1] - 1)) == c


def test_normalized_and_evaluate(cusp):
    f = parse_polynomial("2*x0^2 + 4*x1^2", 1)
    assert serialize_polynomial(f.normalized()) == "x1^2 + 1/2*x0^2"
    assert cusp.evaluate((1, 1, 1)) == 0
    assert cusp.evaluate((2, 1, 1)) == -7
    assert cusp.support() == [(3, 0, 0), (0, 2, 1)]


def test_hilbert_data():
    data = HilbertData(2, 3)
    assert data.gotzmann == 3
    assert data.P(3) == 9
    assert data.Q(3) == 1
    assert data.Q(4) == 3
    assert data.P(4) + data.Q(4) == monomial_count(2, 4)
    assert hilbert_values(2, 3, 5) == (data.P(5), data.Q(5))
    assert hilbert_values(3, 4, 4) == (34, 1)
    with pytest.raises(BelowGotzmannError):
        hilbert_values(2, 3, 2)


def test_multiply_matches_convolution_on_random_polynomials(sparse_corpus):
    rng = random.Random(3)
    for f in sparse_corpus[:20]:
        for D in range(3):
            m = rng.choice(enumerate_monomials(f.r, D))
            product = multiply(f, m)
            assert product.d == f.d + D
            for target in enumerate_monomials(f.r, f.d + D):
                shifted = tuple(a - b for a, b in zip(target, m))
                expected = f.coefficient(shifted) if min(shifted) >= 0 else 0
                assert product.coefficient(target) == expected


@pytest.mark.parametrize(
    "text, scaled, c",
    [
        ("x0^2 - 3*x1*x2 + 1/2*x2^2", "4*x0^2 - 12*x1*x2 + 2*x2^2", 4),
        ("x1^2*x2 - x0^3", "-2/3*x1^2*x2 + 2/3*x0^3", Fraction(-2, 3)),
        ("x0*x1", "7*x1*x0", 7),
    ],
)
def test_scalar_multiples_parse_proportionally(text, scaled, c):
    r = 2 if "x2" in text else 1
    f = parse_polynomial(text, r)
    g = parse_polynomial(scaled, r)
    assert g.terms.keys() == f.terms.keys()
    assert all(g.coefficient(m) == c * f.coefficient(m) for m in f.terms)
    assert g.normalized() == f.normalized()
