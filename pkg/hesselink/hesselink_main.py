#!/usr/bin/python

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import yaml

from .action.group import ProjectivePoint
from .algebra.parser import parse_polynomial, serialize_polynomial
from .errors import CapExceededError, HesselinkError, PolynomialParseError
from .multiplicity import check_singular_if_unstable, hesselink_bounds, max_multiplicity
from .polytope import verify_theorem1
from .report import (
    LOWER_BOUND_WARNING,
    MULTIPLICITY_WARNING,
    SEMISTABLE_WARNING,
    AnalysisReport,
    Theorem1Summary,
)
from .search import SearchConfig, StratumLabel, classify
from .session import load_session, resolve_settings
from .utils import format_rational, read_points_file, read_polynomial_file, read_polynomial_lines

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3

LOG_FORMAT = "[%(asctime)s] %(levelname)s: %(message)s"


def session_point(p):
    """A point of the session file, written as "1, 0, 2/3" or as a list."""
    return ProjectivePoint.parse(p) if isinstance(p, str) else ProjectivePoint(p)


def analyze(f, settings, points=(), theorem1=False):
    """
    Run the full analysis of one hypersurface: search, bounds, multiplicity
    and optionally the degree comparison.

    Args:
        f (HomogeneousPolynomial): The hypersurface.
        settings (dict): Resolved session settings.
        points (list of ProjectivePoint): Extra candidate points.
        theorem1 (bool): Also run verify_theorem1.

    Returns:
        AnalysisReport: The report, timed unless settings disable it.
    """
    start = time.perf_counter()
    points = list(points) + [session_point(p) for p in settings["search"]["points"]]
    cfg = SearchConfig.from_settings(settings["search"], points)
    stratum = classify(f, cfg)
    multiplicity = max_multiplicity(f, points)

    bounds = None
    singular = None
    warnings = []
    if isinstance(stratum, StratumLabel):
        bounds = hesselink_bounds(stratum, f.d, f.r)
        if f.d >= f.r + 1:
            singular = check_singular_if_unstable(stratum, f.d, f.r)
        warnings.append(LOWER_BOUND_WARNING)
    else:
        warnings.append(SEMISTABLE_WARNING)
    warnings.append(MULTIPLICITY_WARNING)

    summary = None
    if theorem1:
        t = settings["theorem1"]
        summary = Theorem1Summary.from_report(verify_theorem1(f, int(t["shift"]), int(t["cap"])))

    elapsed = int((time.perf_counter() - start) * 1000) if settings["output"]["timing"] else None
    return AnalysisReport(
        r=f.r,
        d=f.d,
        polynomial=serialize_polynomial(f),
        stratum=stratum,
        multiplicity=multiplicity,
        bounds=bounds,
        singular_if_unstable=singular,
        theorem1=summary,
        search={
            "budget": cfg.budget,
            "seed": cfg.seed,
            "entry_bound": cfg.entry_bound,
            "perturbations": cfg.perturbations,
        },
        warnings=tuple(warnings),
        elapsed_ms=elapsed,
    )


def error(message):
    print(f"Error: {message}", file=sys.stderr)


def emit(report, as_json):
    if as_json:
        print(report.to_json())
    else:
        print(report.to_text())


def get_poly(args):
    """The polynomial text of --poly, or the contents of --file."""
    if getattr(args, "file", None):
        return read_polynomial_file(args.file)
    return args.poly


def get_points(args):
    if getattr(args, "points", None):
        return read_points_file(args.points, args.dim)
    return []


def cmd_analyze(args, settings):
    try:
        f = parse_polynomial(get_poly(args), args.dim)
        points = get_points(args)
    except (PolynomialParseError, ValueError, OSError) as e:
        error(e)
        return EXIT_INPUT_ERROR
    try:
        report = analyze(f, settings, points, theorem1=args.theorem1)
    except CapExceededError as e:
        error(e)
        return EXIT_CAP_EXCEEDED
    except ValueError as e:
        error(e)
        return EXIT_INPUT_ERROR
    emit(report, settings["output"]["json"])
    if report.theorem1 is not None and not report.theorem1.passed:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_verify_theorem1(args, settings):
    try:
        f = parse_polynomial(args.poly, args.dim)
    except PolynomialParseError as e:
        error(e)
        return EXIT_INPUT_ERROR
    shift, cap = int(settings["theorem1"]["shift"]), int(settings["theorem1"]["cap"])
    try:
        summary = Theorem1Summary.from_report(verify_theorem1(f, shift, cap))
    except CapExceededError as e:
        error(e)
        return EXIT_CAP_EXCEEDED
    except ValueError as e:
        error(e)
        return EXIT_INPUT_ERROR

    if settings["output"]["json"]:
        out = {"input": {"r": f.r, "d": f.d, "polynomial": serialize_polynomial(f)}}
        out["theorem1"] = summary.to_dict()
        print(json.dumps(out))
    else:
        print(f"Degree comparison for {serialize_polynomial(f)} (r={f.r}, d={f.d}, shift {shift}): "
              f"{'PASS' if summary.passed else 'FAIL'}")
        print(f"  delta^2: {format_rational(summary.low_delta_squared)} -> "
              f"{format_rational(summary.high_delta_squared)} "
              f"(expected {format_rational(summary.expected_delta_squared)})")
        print(f"  classes: {summary.low_class} / {summary.high_class}")
        if not summary.precondition_met:
            print("  note: f is not torus-unstable in these coordinates")
    return EXIT_OK if summary.passed else EXIT_CHECK_FAILED


def analyze_line(payload):
    """
    Analyze one batch line. Runs in worker processes, so it only takes and
    returns plain data.

    Returns:
        tuple: (ok, dict) with the report dict or an error object.
    """
    number, text, r, settings, points, theorem1 = payload
    try:
        f = parse_polynomial(text, r)
        report = analyze(f, settings, points, theorem1=theorem1)
    except (HesselinkError, ValueError) as e:
        return False, {
            "line": number,
            "input": text,
            "error": {"type": type(e).__name__, "message": str(e)},
        }
    return True, report.to_dict()


def cmd_batch(args, settings):
    try:
        lines = read_polynomial_lines(args.file)
        points = get_points(args)
    except (ValueError, OSError) as e:
        error(e)
        return EXIT_INPUT_ERROR

    payloads = [(n, text, args.dim, settings, points, args.theorem1) for n, text in lines]
    jobs = int(settings["jobs"])
    log.info("Batch of %d lines with %d job(s)", len(payloads), jobs)
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(analyze_line, payloads))
    else:
        results = [analyze_line(p) for p in payloads]

    failed = False
    for ok, obj in results:
        failed = failed or not ok
        print(json.dumps(obj, ensure_ascii=False))
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def list_func(session):
    """
    List all available profiles of the session.
    """
    print(yaml.dump(list(session.keys())), end="")
    return EXIT_OK


def overrides_from_args(args):
    """Settings given explicitly on the command line; unset flags are None."""
    get = lambda name: getattr(args, name, None)
    return {
        "search": {
            "budget": get("budget"),
            "seed": get("seed"),
            "entry_bound": get("entry_bound"),
            "perturbations": get("perturbations"),
        },
        "theorem1": {"shift": get("shift"), "cap": get("cap")},
        "output": {
            "json": True if get("json") else None,
            "timing": False if get("no_timing") else None,
        },
        "jobs": get("jobs"),
    }


def router(cmd, args, settings):
    """
    Main function to route commands to the appropriate function.
    """
    if cmd == "analyze":
        return cmd_analyze(args, settings)
    elif cmd == "verify":
        return cmd_verify_theorem1(args, settings)
    elif cmd == "batch":
        return cmd_batch(args, settings)
    raise ValueError(f"Unknown command {cmd}")


def add_common(parser):
    parser.add_argument("--session", default=None, help="Custom session file to be used.")
    parser.add_argument(
        "--target",
        default=None,
        help="The session profile to be used. Use 'list' to view available options.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug messages to standard error.")
    parser.add_argument("--json", action="store_true", help="Emit the report as JSON.")


def add_polynomial(parser, poly=True, poly_file=False):
    parser.add_argument("--dim", type=int, required=True, help="Dimension r of the projective space P^r.")
    if poly and poly_file:
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--poly", help='Homogeneous polynomial, e.g. "x1^2*x2 - x0^3".')
        source.add_argument("--file", help="File holding the polynomial.")
    elif poly:
        parser.add_argument("--poly", required=True, help='Homogeneous polynomial, e.g. "x1^2*x2 - x0^3".')


def add_search(parser):
    parser.add_argument("--budget", type=int, default=None, help="Random group elements to try.")
    parser.add_argument("--seed", type=int, default=None, help="Seed of the search.")
    parser.add_argument("--entry-bound", type=int, default=None, help="Bound on random matrix entries.")
    parser.add_argument(
        "--perturbations", type=int, default=None, help="Lower-triangular perturbations per improvement."
    )
    parser.add_argument("--points", default=None, help="File of candidate points, one per line.")
    parser.add_argument("--theorem1", action="store_true", help="Also compare degrees d and d+D.")
    parser.add_argument("--no-timing", action="store_true", help="Leave the timing section out.")


def add_theorem1(parser):
    parser.add_argument("--shift", type=int, default=None, help="The degree shift D (default 1).")
    parser.add_argument("--cap", type=int, default=None, help="Maximum number of column tuples.")


def build_parser():
    parser = argparse.ArgumentParser(
        description="HESSELINK: instability strata and multiplicity bounds of projective hypersurfaces"
    )
    subparser = parser.add_subparsers(help="Sub-command help", dest="command")

    analyzeparser = subparser.add_parser("analyze", help="Classify a hypersurface and bound its multiplicity.")
    add_polynomial(analyzeparser, poly_file=True)
    add_search(analyzeparser)
    add_theorem1(analyzeparser)
    add_common(analyzeparser)

    verifyparser = subparser.add_parser(
        "verify", help="Check that the stratum is the same at degrees d and d+D."
    )
    add_polynomial(verifyparser)
    add_theorem1(verifyparser)
    add_common(verifyparser)

    batchparser = subparser.add_parser("batch", help="Analyze one polynomial per line, JSON lines output.")
    batchparser.add_argument("--file", required=True, help="File with one polynomial per line.")
    add_polynomial(batchparser, poly=False)
    add_search(batchparser)
    add_theorem1(batchparser)
    batchparser.add_argument("--jobs", type=int, default=None, help="Worker processes.")
    add_common(batchparser)

    listparser = subparser.add_parser("list", help="List the session profiles.")
    listparser.add_argument("--session", default=None, help="Custom session file to be used.")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format=LOG_FORMAT,
    )

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        session = load_session(args.session)
    except (OSError, ValueError, yaml.YAMLError) as e:
        error(f"Cannot read session: {e}")
        return EXIT_INPUT_ERROR

    if args.command == "list":
        return list_func(session)

    try:
        settings = resolve_settings(session, args.target, overrides_from_args(args))
        # a search config is built here so bad values fail before any work
        SearchConfig.from_settings(settings["search"])
    except (KeyError, ValueError) as e:
        error(e.args[0] if e.args else e)
        return EXIT_INPUT_ERROR

    return router(args.command, args, settings)


if __name__ == "__main__":
    sys.exit(main())
