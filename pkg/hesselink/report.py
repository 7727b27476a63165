"""
Analysis reports and their JSON form.

Every rational is written as a "p/q" string (integers too, e.g. "12/1"), so a
report read back with `AnalysisReport.from_dict` is identical to the original.
"""
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Optional

import jsonschema

from .action.group import GroupElement, ProjectivePoint
from .action.subgroup import OneParamSubgroup
from .algebra.parser import parse_polynomial, serialize_polynomial
from .multiplicity import BoundsReport, MultiplicityReport, is_sharp_class
from .search import SemistableVerdict, StratumLabel
from .utils import format_fraction, format_rational, parse_fraction

log = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "schema", "report_schema.json")

LOWER_BOUND_WARNING = (
    "delta^2 is a lower bound: the coordinate search is finite and runs over rational matrices"
)
SEMISTABLE_WARNING = "the semistable verdict is not a certificate of semistability"
MULTIPLICITY_WARNING = "max multiplicity is taken over finitely many candidate points and is a lower bound on n_X"


@dataclass(frozen=True)
class Theorem1Summary:
    """The parts of a Theorem1Report that go into an analysis report."""

    shift: int
    low_delta_squared: object
    high_delta_squared: object
    expected_delta_squared: object
    low_class: Optional[tuple]
    high_class: Optional[tuple]
    precondition_met: bool
    delta_holds: bool
    class_holds: bool

    @property
    def passed(self):
        return self.delta_holds and self.class_holds

    @classmethod
    def from_report(cls, report):
        return cls(
            shift=report.D,
            low_delta_squared=report.low.delta_squared,
            high_delta_squared=report.high.delta_squared,
            expected_delta_squared=report.expected_delta_squared,
            low_class=tuple(report.low_class) if report.low_class is not None else None,
            high_class=tuple(report.high_class) if report.high_class is not None else None,
            precondition_met=report.precondition_met,
            delta_holds=report.delta_holds,
            class_holds=report.class_holds,
        )

    def to_dict(self):
        return {
            "shift": self.shift,
            "low_delta_squared": format_fraction(self.low_delta_squared),
            "high_delta_squared": format_fraction(self.high_delta_squared),
            "expected_delta_squared": format_fraction(self.expected_delta_squared),
            "low_class": list(self.low_class) if self.low_class is not None else None,
            "high_class": list(self.high_class) if self.high_class is not None else None,
            "precondition_met": self.precondition_met,
            "delta_holds": self.delta_holds,
            "class_holds": self.class_holds,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            shift=d["shift"],
            low_delta_squared=parse_fraction(d["low_delta_squared"]),
            high_delta_squared=parse_fraction(d["high_delta_squared"]),
            expected_delta_squared=parse_fraction(d["expected_delta_squared"]),
            low_class=tuple(d["low_class"]) if d["low_class"] is not None else None,
            high_class=tuple(d["high_class"]) if d["high_class"] is not None else None,
            precondition_met=d["precondition_met"],
            delta_holds=d["delta_holds"],
            class_holds=d["class_holds"],
        )


def stratum_to_dict(stratum):
    if isinstance(stratum, SemistableVerdict):
        return {
            "status": "semistable",
            "message": stratum.message,
            "candidates_evaluated": stratum.candidates_evaluated,
        }
    return {
        "status": "unstable",
        "lambda_class": list(stratum.lambda_class),
        "delta_squared": format_fraction(stratum.delta_squared),
        "mu": format_fraction(stratum.mu),
        "witness_g": stratum.witness_g.serialize(),
        "witness_lambda": list(stratum.witness_lambda),
        "source": stratum.source,
    }


def stratum_from_dict(d):
    if d["status"] == "semistable":
        return SemistableVerdict(candidates_evaluated=d["candidates_evaluated"], message=d["message"])
    return StratumLabel(
        lambda_class=tuple(d["lambda_class"]),
        delta_squared=parse_fraction(d["delta_squared"]),
        mu=parse_fraction(d["mu"]),
        witness_g=GroupElement.deserialize(d["witness_g"]),
        witness_lambda=tuple(d["witness_lambda"]),
        source=d["source"],
    )


def bounds_to_dict(bounds):
    return {
        "lower": format_fraction(bounds.lower),
        "upper": format_fraction(bounds.upper),
        "lambda": list(bounds.lam),
        "mu": format_fraction(bounds.mu),
        "a": bounds.a,
        "b": bounds.b,
        "d": bounds.d,
        "r": bounds.r,
        "sharp_class": is_sharp_class(bounds.lam),
    }


def bounds_from_dict(d):
    return BoundsReport(
        lower=parse_fraction(d["lower"]),
        upper=parse_fraction(d["upper"]),
        lam=OneParamSubgroup(d["lambda"]),
        mu=parse_fraction(d["mu"]),
        a=d["a"],
        b=d["b"],
        d=d["d"],
        r=d["r"],
    )


@dataclass(frozen=True)
class AnalysisReport:
    """
    Everything `hesselink analyze` reports for one hypersurface.

    Attributes:
        r (int): dimension of the ambient projective space.
        d (int): degree of f.
        polynomial (str): canonical text of f.
        stratum (StratumLabel or SemistableVerdict): result of the search.
        multiplicity (MultiplicityReport): worst point among the candidates.
        bounds (BoundsReport or None): present when f is unstable.
        singular_if_unstable (bool or None): None when not unstable or d < r+1.
        theorem1 (Theorem1Summary or None): present when requested.
        search (dict): budget, seed, entry_bound, perturbations.
        warnings (list): lower-bound qualifiers.
        elapsed_ms (int or None): wall time, left out with --no-timing.
    """

    r: int
    d: int
    polynomial: str
    stratum: object
    multiplicity: MultiplicityReport
    bounds: Optional[BoundsReport] = None
    singular_if_unstable: Optional[bool] = None
    theorem1: Optional[Theorem1Summary] = None
    search: dict = field(default_factory=dict)
    warnings: tuple = ()
    elapsed_ms: Optional[int] = None

    @property
    def is_unstable(self):
        return isinstance(self.stratum, StratumLabel)

    def to_dict(self):
        m = self.multiplicity
        d = {
            "input": {"r": self.r, "d": self.d, "polynomial": self.polynomial},
            "stratum": stratum_to_dict(self.stratum),
            "bounds": bounds_to_dict(self.bounds) if self.bounds is not None else None,
            "multiplicity": {
                "point": [format_fraction(x) for x in m.point],
                "value": m.value,
                "moved_polynomial": serialize_polynomial(m.moved_polynomial),
            },
            "singular_if_unstable": self.singular_if_unstable,
            "theorem1": self.theorem1.to_dict() if self.theorem1 is not None else None,
            "search": dict(self.search),
            "warnings": list(self.warnings),
        }
        if self.elapsed_ms is not None:
            d["timing"] = {"elapsed_ms": self.elapsed_ms}
        return d

    @classmethod
    def from_dict(cls, d):
        r = d["input"]["r"]
        m = d["multiplicity"]
        return cls(
            r=r,
            d=d["input"]["d"],
            polynomial=d["input"]["polynomial"],
            stratum=stratum_from_dict(d["stratum"]),
            multiplicity=MultiplicityReport(
                point=ProjectivePoint(parse_fraction(x) for x in m["point"]),
                value=m["value"],
                moved_polynomial=parse_polynomial(m["moved_polynomial"], r),
            ),
            bounds=bounds_from_dict(d["bounds"]) if d["bounds"] is not None else None,
            singular_if_unstable=d["singular_if_unstable"],
            theorem1=Theorem1Summary.from_dict(d["theorem1"]) if d["theorem1"] is not None else None,
            search=dict(d["search"]),
            warnings=tuple(d["warnings"]),
            elapsed_ms=d["timing"]["elapsed_ms"] if "timing" in d else None,
        )

    def to_json(self):
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def to_text(self):
        """Human-readable report, one section per part."""
        lines = [f"Hypersurface: {self.polynomial}  (r={self.r}, d={self.d})", "", "Stratum:"]
        s = self.stratum
        if self.is_unstable:
            lines += [
                f"  lambda class:   {tuple(s.lambda_class)}",
                f"  delta^2:        {format_rational(s.delta_squared)}",
                f"  mu:             {format_rational(s.mu)}",
                f"  witness lambda: {tuple(s.witness_lambda)}",
                f"  witness g:      {s.witness_g.serialize()}",
            ]
        else:
            lines.append(f"  semistable: {s.message} ({s.candidates_evaluated} candidates)")
        if self.bounds is not None:
            b = self.bounds
            lines += [
                "",
                "Bounds on the maximal multiplicity:",
                f"  lower: {format_rational(b.lower)}",
                f"  upper: {format_rational(b.upper)}",
            ]
        m = self.multiplicity
        lines += ["", "Multiplicity:", f"  n = {m.value} at {m.point!r}"]
        if self.singular_if_unstable is not None:
            lines.append(f"  unstable implies singular: {self.singular_if_unstable}")
        if self.theorem1 is not None:
            t = self.theorem1
            lines += [
                "",
                f"Degree comparison (shift {t.shift}): {'PASS' if t.passed else 'FAIL'}",
                f"  delta^2: {format_rational(t.low_delta_squared)} -> "
                f"{format_rational(t.high_delta_squared)} "
                f"(expected {format_rational(t.expected_delta_squared)})",
                f"  classes: {t.low_class} / {t.high_class}",
            ]
        if self.warnings:
            lines += ["", "Warnings:"] + [f"  - {w}" for w in self.warnings]
        if self.elapsed_ms is not None:
            lines += ["", f"Elapsed: {self.elapsed_ms} ms"]
        return "\n".join(lines)


def load_schema():
    with open(SCHEMA_PATH) as f:
        return json.load(f)


def validate_report(obj):
    """
    Raises:
        jsonschema.ValidationError: `obj` does not follow the report schema.
    """
    jsonschema.validate(instance=obj, schema=load_schema())
