from .monomials import ExponentVector, enumerate_monomials, monomial_count, monomial_key
from .polynomial import HomogeneousPolynomial, multiply
from .parser import parse_polynomial, serialize_polynomial
from .hilbert import HilbertData, hilbert_values
