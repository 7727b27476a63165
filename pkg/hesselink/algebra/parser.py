"""
Text form of homogeneous polynomials.

Grammar (whitespace ignored)::

    polynomial := term (("+" | "-") term)*
    term       := [sign] [rational "*"] factor ("*" factor)*
    factor     := "x" index ["^" exponent]
    rational   := integer ["/" positive-integer]
"""
import re
from fractions import Fraction

from ..errors import PolynomialParseError, PolynomialSyntaxError, UnknownVariableError
from .monomials import ExponentVector, monomial_key
from .polynomial import HomogeneousPolynomial

_RATIONAL = re.compile(r"(\d+)(?:/(\d+))?")
_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")
_SIGNS = {"+": 1, "-": -1, "−": -1}


def parse_polynomial(text, r):
    """
    Parse `text` into a HomogeneousPolynomial in k[x_0, ..., x_r].

    Raises:
        PolynomialSyntaxError: the text does not follow the grammar.
        UnknownVariableError: a variable index exceeds r.
        NonHomogeneousError: the terms have different degrees.
        ZeroPolynomialError: all coefficients cancel.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialSyntaxError(text, 0, "empty polynomial")

    terms = {}
    pos = 0
    first = True
    while True:
        sign = 1
        if pos < len(s) and s[pos] in _SIGNS:
            sign = _SIGNS[s[pos]]
            pos += 1
        elif not first:
            raise PolynomialSyntaxError(text, pos, "expected '+' or '-' between terms")
        first = False

        coefficient = Fraction(sign)
        match = _RATIONAL.match(s, pos)
        if match:
            numerator, denominator = match.group(1), match.group(2)
            if denominator is not None and int(denominator) == 0:
                raise PolynomialSyntaxError(text, match.start(2), "zero denominator")
            coefficient *= Fraction(int(numerator), int(denominator or 1))
            pos = match.end()
            if pos >= len(s) or s[pos] != "*":
                raise PolynomialSyntaxError(text, pos, "a coefficient must be followed by '*'")
            pos += 1

        exponents = [0] * (r + 1)
        while True:
            match = _FACTOR.match(s, pos)
            if not match:
                raise PolynomialSyntaxError(text, pos, "expected a variable like x0 or x1^2")
            index = int(match.group(1))
            if index > r:
                raise UnknownVariableError(index, r)
            exponents[index] += int(match.group(2) or 1)
            pos = match.end()
            if pos < len(s) and s[pos] == "*":
                pos += 1
                continue
            break

        m = ExponentVector(exponents)
        terms[m] = terms.get(m, Fraction(0)) + coefficient
        if pos == len(s):
            break

    f = HomogeneousPolynomial(r, terms)
    if f.d == 0:
        raise PolynomialParseError(f"Constant polynomial {text!r} does not define a hypersurface")
    return f


def _format_monomial(m):
    factors = []
    for i, a in enumerate(m):
        if a == 1:
            factors.append(f"x{i}")
        elif a > 1:
            factors.append(f"x{i}^{a}")
    return "*".join(factors)


def serialize_polynomial(f):
    """Canonical text of f: terms in descending canonical order."""
    out = []
    for m in sorted(f.terms, key=monomial_key, reverse=True):
        c = f.terms[m]
        magnitude = abs(c)
        body = _format_monomial(m)
        if magnitude != 1:
            body = f"{magnitude}*{body}" if body else f"{magnitude}"
        elif not body:
            body = "1"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)
