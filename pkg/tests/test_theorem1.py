from fractions import Fraction

import pytest

from hesselink.algebra import parse_polynomial
from hesselink.errors import CapExceededError
from hesselink.polytope import check_min_scaling, tau, verify_theorem1


@pytest.mark.parametrize(
    "text, r, D, low, high, lam_class",
    [
        ("x0^2", 1, 1, 2, 8, (1, -1)),
        ("x0^2", 1, 2, 2, 18, (1, -1)),
        ("x0^2", 2, 1, Fraction(8, 3), 24, (2, -1, -1)),
        ("x0^3", 2, 1, 6, 54, (2, -1, -1)),
        ("x0^4", 3, 1, 12, 192, (3, -1, -1, -1)),
        ("x1*x2^2", 2, 1, 2, 18, (1, 0, -1)),
    ],
)
def test_degree_shift_scales_delta(text, r, D, low, high, lam_class):
    report = verify_theorem1(parse_polynomial(text, r), D, cap=10**6)
    assert report.low.delta_squared == low
    assert report.high.delta_squared == high
    assert report.expected_delta_squared == high
    assert report.low_class == lam_class == report.high_class
    assert report.precondition_met
    assert report.passed


def test_degree_shift_cusp(cusp):
    report = verify_theorem1(cusp, 1, cap=10**6)
    assert report.expected_delta_squared == 9 * Fraction(3, 14)
    assert report.passed


def test_degree_shift_torus_semistable():
    report = verify_theorem1(parse_polynomial("x0*x1", 1), 1, cap=10**6)
    assert report.low.delta_squared == 0
    assert report.high.delta_squared == 0
    assert not report.precondition_met
    assert report.low_class is None and report.high_class is None
    assert report.passed


def test_degree_shift_cap(cusp):
    with pytest.raises(CapExceededError):
        verify_theorem1(cusp, 1, cap=5)


def test_min_scaling():
    f = parse_polynomial("x0^2", 2)
    assert check_min_scaling(f, 1, (2, -1, -1), cap=1000)
    assert check_min_scaling(f, 1, (-1, 2, -1), cap=1000)


def test_tau():
    assert tau(3, 2, 1) == 27
    assert tau(Fraction(8, 3), 2, 1) == 24
    assert tau(5, 2, 0) == 5
    with pytest.raises(ValueError):
        tau(1, 2, -1)
