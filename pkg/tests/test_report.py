import json
from fractions import Fraction

import jsonschema
import pytest

from hesselink.algebra import parse_polynomial
from hesselink.hesselink_main import analyze
from hesselink.report import (
    LOWER_BOUND_WARNING,
    SEMISTABLE_WARNING,
    AnalysisReport,
    validate_report,
)
from hesselink.session import resolve_settings
from hesselink.utils import format_fraction, format_rational, parse_fraction


@pytest.fixture
def settings():
    return resolve_settings({}, overrides={"search": {"budget": 3}, "output": {"timing": False}})


def test_unstable_report(quartic_x0, settings):
    report = analyze(quartic_x0, settings, theorem1=True)
    d = report.to_dict()
    validate_report(d)
    assert d["input"] == {"r": 3, "d": 4, "polynomial": "x0^4"}
    assert d["stratum"]["status"] == "unstable"
    assert d["stratum"]["lambda_class"] == [3, -1, -1, -1]
    assert d["stratum"]["delta_squared"] == "12/1"
    assert d["stratum"]["mu"] == "12/1"
    assert d["bounds"]["lower"] == "4/1"
    assert d["bounds"]["upper"] == "4/1"
    assert d["bounds"]["sharp_class"] is False
    assert d["multiplicity"]["value"] == 4
    assert d["singular_if_unstable"] is True
    assert d["theorem1"]["passed"] is True
    assert d["theorem1"]["high_delta_squared"] == "192/1"
    assert LOWER_BOUND_WARNING in d["warnings"]
    assert "timing" not in d


def test_semistable_report(fermat_conic, settings):
    report = analyze(fermat_conic, settings)
    d = report.to_dict()
    validate_report(d)
    assert d["stratum"]["status"] == "semistable"
    assert d["stratum"]["message"] == "no destabilizing 1-PS found within budget"
    assert d["bounds"] is None
    assert d["singular_if_unstable"] is None
    assert SEMISTABLE_WARNING in d["warnings"]


@pytest.mark.parametrize(
    "text, r, theorem1",
    [("x0^4", 3, True), ("x1^2*x2 - x0^3", 2, True), ("x0^3 + x1^3 + x2^3", 2, False), ("x0*x1", 1, True)],
)
def test_report_round_trip(text, r, theorem1, settings):
    report = analyze(parse_polynomial(text, r), settings, theorem1=theorem1)
    d = json.loads(report.to_json())
    restored = AnalysisReport.from_dict(d)
    assert restored == report
    assert restored.to_dict() == d


def test_report_timing(cusp):
    timed = resolve_settings({}, overrides={"search": {"budget": 0}})
    d = analyze(cusp, timed).to_dict()
    validate_report(d)
    assert d["timing"]["elapsed_ms"] >= 0


def test_report_text(quartic_x0, settings):
    text = analyze(quartic_x0, settings).to_text()
    assert "lambda class:   (3, -1, -1, -1)" in text
    assert "lower: 4" in text


def test_schema_rejects_float_rationals(quartic_x0, settings):
    d = analyze(quartic_x0, settings).to_dict()
    d["stratum"]["delta_squared"] = 12.0
    with pytest.raises(jsonschema.ValidationError):
        validate_report(d)


def test_fraction_formats():
    assert format_fraction(12) == "12/1"
    assert format_fraction(Fraction(-3, 14)) == "-3/14"
    assert parse_fraction("-3/14") == Fraction(-3, 14)
    with pytest.raises(ValueError):
        parse_fraction("12")
    assert format_rational(Fraction(3, 14)) == "3/14 ≈ 0.214286"
    assert format_rational(Fraction(12)) == "12"
