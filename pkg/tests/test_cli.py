import json

import pytest

from hesselink.hesselink_main import (
    EXIT_CAP_EXCEEDED,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    main,
)
from hesselink.session import load_session, resolve_settings

SESSION = """
default:
  search:
    budget: 2
deep:
  search:
    budget: 7
    seed: 3
  output:
    timing: false
"""


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_quartic(capsys):
    code, out, _ = run(capsys, "analyze", "--dim", "3", "--poly", "x0^4", "--budget", "3", "--json", "--no-timing")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["stratum"]["lambda_class"] == [3, -1, -1, -1]
    assert report["stratum"]["delta_squared"] == "12/1"
    assert (report["bounds"]["lower"], report["bounds"]["upper"]) == ("4/1", "4/1")
    assert report["multiplicity"]["value"] == 4


def test_analyze_semistable(capsys):
    code, out, _ = run(
        capsys, "analyze", "--dim", "2", "--poly", "x0^2+x1^2+x2^2", "--budget", "3", "--json"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["stratum"]["status"] == "semistable"
    assert report["bounds"] is None


def test_analyze_human_output(capsys):
    code, out, _ = run(capsys, "analyze", "--dim", "2", "--poly", "x1^2*x2 - x0^3", "--budget", "0")
    assert code == EXIT_OK
    assert "Stratum:" in out
    assert "≈" in out


def test_analyze_input_error(capsys):
    code, out, err = run(capsys, "analyze", "--dim", "2", "--poly", "x0^2 + x1")
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("Error:")


def test_analyze_deterministic(capsys):
    argv = ["analyze", "--dim", "2", "--poly", "x1^2*x2 - x0^3", "--budget", "5", "--seed", "4", "--json", "--no-timing"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_analyze_points_file(capsys, isolated):
    (isolated / "points.txt").write_text("# cusp\n0, 0, 1\n\n1, 1, 1\n")
    code, out, _ = run(
        capsys, "analyze", "--dim", "2", "--poly", "x1^2*x2 - x0^3", "--budget", "0",
        "--points", "points.txt", "--json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["multiplicity"]["value"] == 2


def test_analyze_polynomial_file(capsys, isolated):
    (isolated / "quartic.txt").write_text("# quadruple hyperplane\nx0^4\n")
    argv = ["--dim", "3", "--budget", "3", "--json", "--no-timing"]
    from_file = run(capsys, "analyze", "--file", "quartic.txt", *argv)
    from_text = run(capsys, "analyze", "--poly", "x0^4", *argv)
    assert from_file[0] == EXIT_OK
    assert from_file == from_text


def test_analyze_wrapped_polynomial_file(capsys, isolated):
    (isolated / "cusp.txt").write_text("x1^2*x2\n  - x0^3\n")
    code, out, _ = run(capsys, "analyze", "--dim", "2", "--file", "cusp.txt", "--budget", "0", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["input"]["polynomial"] == "x1^2*x2 - x0^3"


@pytest.mark.parametrize("content", [None, "", "x0^2 + x1\n"])
def test_analyze_bad_polynomial_file(capsys, isolated, content):
    if content is not None:
        (isolated / "poly.txt").write_text(content)
    code, out, err = run(capsys, "analyze", "--dim", "2", "--file", "poly.txt")
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "Error:" in err


def test_analyze_needs_one_polynomial_source(capsys, isolated):
    (isolated / "poly.txt").write_text("x0^2\n")
    with pytest.raises(SystemExit):
        main(["analyze", "--dim", "2", "--poly", "x0^2", "--file", "poly.txt"])
    with pytest.raises(SystemExit):
        main(["analyze", "--dim", "2"])


def test_analyze_bad_points_file(capsys, isolated):
    (isolated / "points.txt").write_text("0, 1\n")
    code, _, err = run(capsys, "analyze", "--dim", "2", "--poly", "x0^2", "--points", "points.txt")
    assert code == EXIT_INPUT_ERROR
    assert "Error:" in err


@pytest.mark.parametrize(
    "dim, poly, shift, high",
    [("1", "x0^2", "1", "8/1"), ("1", "x0^2", "2", "18/1"), ("2", "x0^2", "1", "24/1")],
)
def test_verify(capsys, dim, poly, shift, high):
    code, out, _ = run(capsys, "verify", "--dim", dim, "--poly", poly, "--shift", shift, "--json")
    assert code == EXIT_OK
    assert json.loads(out)["theorem1"]["high_delta_squared"] == high


def test_verify_human_output(capsys):
    code, out, _ = run(capsys, "verify", "--dim", "1", "--poly", "x0^2")
    assert code == EXIT_OK
    assert "PASS" in out


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "--dim", "2", "--poly", "x1^2*x2 - x0^3", "--cap", "5")
    assert code == EXIT_CAP_EXCEEDED
    assert "cap" in err


def test_batch(capsys, isolated):
    (isolated / "polys.txt").write_text("x0^4\nx0^3 + x1^3 + x2^3 + x3^3\nx0^2\n")
    code, out, _ = run(capsys, "batch", "--file", "polys.txt", "--dim", "3", "--budget", "2", "--no-timing")
    assert code == EXIT_OK
    reports = [json.loads(line) for line in out.splitlines()]
    assert [r["stratum"]["status"] for r in reports] == ["unstable", "semistable", "unstable"]
    assert reports[0]["stratum"]["lambda_class"] == [3, -1, -1, -1]
    assert reports[2]["input"]["polynomial"] == "x0^2"


def test_batch_parallel_matches_serial(capsys, isolated):
    (isolated / "polys.txt").write_text("x0^4\nx1^2*x2 - x0^3\nx0*x1*x2^2\n")
    argv = ["batch", "--file", "polys.txt", "--dim", "3", "--budget", "2", "--no-timing"]
    serial = run(capsys, *argv)
    parallel = run(capsys, *argv, "--jobs", "2")
    assert serial == parallel


def test_batch_bad_line(capsys, isolated):
    (isolated / "polys.txt").write_text("x0^2\nx0^2 + x1\n")
    code, out, _ = run(capsys, "batch", "--file", "polys.txt", "--dim", "2", "--budget", "1")
    assert code == EXIT_CHECK_FAILED
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    assert lines[1]["line"] == 2
    assert lines[1]["error"]["type"] == "NonHomogeneousError"


def test_batch_empty_file(capsys, isolated):
    (isolated / "polys.txt").write_text("")
    assert run(capsys, "batch", "--file", "polys.txt", "--dim", "2") == (EXIT_OK, "", "")


def test_batch_missing_file(capsys):
    code, _, _ = run(capsys, "batch", "--file", "missing.txt", "--dim", "2")
    assert code == EXIT_INPUT_ERROR


def test_list_profiles(capsys, isolated):
    (isolated / "session.yml").write_text(SESSION)
    code, out, _ = run(capsys, "list")
    assert code == EXIT_OK
    assert out == "- default\n- deep\n"


def test_session_profile(capsys, isolated):
    (isolated / "session.yml").write_text(SESSION)
    code, out, _ = run(capsys, "analyze", "--dim", "3", "--poly", "x0^4", "--target", "deep", "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["search"]["budget"] == 7
    assert report["search"]["seed"] == 3
    assert "timing" not in report

    code, out, _ = run(capsys, "analyze", "--dim", "3", "--poly", "x0^4", "--target", "deep", "--budget", "1", "--json")
    assert json.loads(out)["search"]["budget"] == 1


def test_unknown_profile(capsys, isolated):
    (isolated / "session.yml").write_text(SESSION)
    code, _, err = run(capsys, "analyze", "--dim", "3", "--poly", "x0^4", "--target", "nope")
    assert code == EXIT_INPUT_ERROR
    assert "nope" in err


def test_no_command(capsys):
    code, _, _ = run(capsys)
    assert code == EXIT_INPUT_ERROR


def test_settings_precedence(isolated):
    (isolated / "session.yml").write_text(SESSION)
    session = load_session()
    assert resolve_settings(session)["search"]["budget"] == 2
    assert resolve_settings(session, "deep")["search"]["budget"] == 7
    assert resolve_settings(session, "deep")["search"]["entry_bound"] == 2
    overrides = {"search": {"budget": 9, "seed": None}}
    settings = resolve_settings(session, "deep", overrides)
    assert settings["search"]["budget"] == 9
    assert settings["search"]["seed"] == 3
    assert resolve_settings({})["jobs"] == 1
    with pytest.raises(KeyError):
        resolve_settings(session, "nope")
