import io
import subprocess
import sys

import pytest

from jalg.cli import run

SPECS = ([f"ball:{n}" for n in range(2, 9)] + [f"lieball:{n}" for n in range(3, 9)]
         + ["siegel:3", "d5"])


def jalg(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.mark.parametrize("spec", SPECS)
def test_emit_then_verify(spec):
    code, text, _ = jalg("catalog", spec, "--emit")
    assert code == 0
    code, out, _ = jalg("verify", "-", stdin=text)
    assert code == 0 and "FAIL" not in out


def test_catalog_summary():
    code, out, _ = jalg("catalog", "lieball:3")
    assert code == 0
    assert out.splitlines()[0] == "algebra lieball:3 kind lieball dim 6"
    assert "axioms PASS" in out


def test_verify_reports_failures_with_exit_one(tmp_path):
    _, text, _ = jalg("catalog", "ball:2", "--emit")
    text = text.replace("kind ball", "kind custom").replace("lambda = -zeta", "lambda = zeta")
    code, out, _ = jalg("verify", write(tmp_path, "bad.jalg", text))
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ("catalog", "ball:1"), ("catalog",), ("frobnicate",), ("verify", "/nonexistent/file"),
    ("paper-suite", "--filter", "no-such-check"), ("orbit-check", "d5", "x"),
])
def test_usage_errors_exit_two(argv):
    code, _, _ = jalg(*argv)
    assert code == 2


def test_malformed_algebra_reports_line_number():
    code, out, err = jalg("verify", "-", stdin="algebra x\ndim 2\nbasis a\nend\n")
    assert code == 2 and err.startswith("error:") and "line 3" in err and out == ""


def test_only_one_stdin_argument(tmp_path):
    code, _, err = jalg("totally-real", "-", "-")
    assert code == 2 and "stdin" in err


def test_totally_real(tmp_path):
    good = write(tmp_path, "g.sub", "subspace g in lieball:3\nvector = xi1p\n")
    bad = write(tmp_path, "b.sub", "subspace b in lieball:3\nvector = xi1\nvector = xi1p\n")
    assert jalg("totally-real", "lieball:3", good)[:2] == (0, "totally-real yes\n")
    assert jalg("totally-real", "lieball:3", bad)[:2] == (1, "totally-real no\n")


def test_complete_modes(tmp_path):
    s = write(tmp_path, "s.sub", "subspace s in lieball:3\nvector = eta\n")
    code, out, _ = jalg("complete", "lieball:3", s)
    assert code == 0 and "completed" in out
    s = write(tmp_path, "t.sub", "subspace t in lieball:3\nvector = xi1p\n")
    code, out, _ = jalg("complete", "lieball:3", s)
    assert code == 1 and "not-applicable" in out
    s = write(tmp_path, "u.sub", "subspace u in ball:3\nvector = zeta\n")
    assert jalg("complete", "ball:3", s, "--mode", "ball")[0] == 0
    assert jalg("complete", "ball:3", s, "--mode", "lieball")[0] == 2


def test_complete_reads_subspace_from_stdin():
    code, out, _ = jalg("complete", "ball:2", "-", stdin="subspace s in ball:2\nvector = zeta\n")
    assert code == 0 and "vector" in out


def test_stein_verdicts(tmp_path):
    heis = write(tmp_path, "h.sub", "subspace h in ball:3\nvector = 2*xi1\n"
                 "vector = 2*xi1p + 2*xi2p\nvector = zeta\n")
    one = write(tmp_path, "o.sub", "subspace o in lieball:3\nvector = xi1p\n")
    two = write(tmp_path, "t.sub", "subspace t in lieball:3\nvector = xi1\nvector = xi1p\n")
    code, out, _ = jalg("stein", "ball:3", heis)
    assert code == 0 and out.startswith("STEIN (")
    assert jalg("stein", "lieball:3", one)[1].startswith("STEIN (")
    code, out, _ = jalg("stein", "lieball:3", two)
    assert code == 1 and out.startswith("NOT-STEIN (thm-main)")


def test_normalizer_of_n_gamma(tmp_path):
    s = write(tmp_path, "n.sub", "subspace n in d5\nvector = xi31p + zeta3 + xi21\n"
              "vector = -xi31 + xi21p\nvector = zeta3 + zeta2\n")
    code, out, _ = jalg("normalizer", "d5", s)
    assert code == 0 and "normalizer dimension 5" in out and "totally-real no" in out


def test_orbit_check_at_z0_is_degenerate(tmp_path):
    sub = write(tmp_path, "n.sub", "subspace n in d5\nvector = xi31p + zeta3 + xi21\n"
                "vector = -xi31 + xi21p\nvector = zeta3 + zeta2\nvector = xi32\n")
    pts = write(tmp_path, "z.pts", "point z0 dim 6\nz 1 = 0 1\nz 2 = 0 1\nz 3 = 0 0\n"
                "z 4 = 0 2\nz 5 = 0 0\nz 6 = 0 1\n")
    code, out, _ = jalg("orbit-check", "d5", sub, "--points", pts)
    assert code == 1 and "point z0 rank 3/4 degenerate" in out


def test_orbit_check_random_points_and_minors(tmp_path):
    sub = write(tmp_path, "h.sub", "subspace h in ball:3\nvector = 2*xi1\n"
                "vector = 2*xi1p + 2*xi2p\nvector = zeta\n")
    code, out, _ = jalg("orbit-check", "ball:3", sub, "--random", "10", "--minors")
    assert code == 0 and "summary: 10/10 orbits totally real" in out and "minor" in out
    assert jalg("orbit-check", "ball:3", sub, "--random", "10", "--minors")[1] == out


def test_orbit_check_rejects_points_outside(tmp_path):
    sub = write(tmp_path, "h.sub", "subspace h in ball:2\nvector = zeta\n")
    pts = write(tmp_path, "p.pts", "point p dim 2\nz 1 = 0 0\nz 2 = 0 0\n")
    assert jalg("orbit-check", "ball:2", sub, "--points", pts)[0] == 2


def test_paper_suite_filter():
    code, out, _ = jalg("paper-suite", "--filter", "siegel-chain")
    assert code == 0
    lines = [x for x in out.splitlines() if x.startswith("CHECK")]
    assert lines and all(x.endswith("PASS") for x in lines)
    assert "summary:" in out


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "jalg.cli", "catalog", "d5"], capture_output=True,
                       text=True, timeout=60)
    assert r.returncode == 0 and "axioms PASS" in r.stdout
