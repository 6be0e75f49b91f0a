import json
import shutil
import subprocess
import sys

import pytest

from hamilton.cli import run

T2T = ["--p", "t^2-t", "--q", "t^2-t"]


def call(capsys, *argv):
    status = run(list(argv))
    out = capsys.readouterr()
    return status, out.out.strip(), out.err


def call_json(capsys, *argv):
    status, out, _ = call(capsys, "--format", "json", *argv)
    assert status == 0
    return json.loads(out)


@pytest.mark.parametrize("argv,expected", [
    (["eval", "a*b"], "(0) + (0)a + (0)b + (1)ab"),
    (["norm", "a"], "0"),
    (["trace", "a"], "1"),
    (["star", "a"], "(1) + (-1)a + (0)b + (0)ab"),
    (["inner", "a", "b"], "t"),
    (["is-unit", "1+a"], "true"),
    (["lambda"], "t^2-t"),
    (["retrace", "a"], "success: (1)a\nconjugators: none"),
    (["factor-unit", "(1+a)"], "1 * [a+1]"),
    (["conj-invariant", "a"], "basic class of a"),
    (["specialize", "t"], "r = t: divides the fundamental polynomial"),
    (["split-witness", "t-5"], "isotropic: (1) + (-1)b"),
    (["word-mul", "2.abab+3.aba", "ab+b"], "2.ababab+8.abab"),
    (["word-mul", "--sorted", "2.abab+3.aba", "ab+b"], "8.abab+2.ababab"),
    (["convert", "--to", "omega", "ba"], "(-w) + (1)a + (1)b + (-1)ab"),
    (["convert", "--to", "word", "a*b"], "ab"),
])
def test_text_outputs(capsys, argv, expected):
    status, out, _ = call(capsys, *T2T, *argv)
    assert status == 0
    assert out == expected


def test_norm_of_commutator_golden(capsys):
    status, out, _ = call(capsys, "--p", "t^2+1", "--q", "t^2+1", "norm", "a*b-b*a")
    assert (status, out) == (0, "-t^2+4")


def test_leading_minus_needs_separator(capsys):
    status, out, _ = call(capsys, "norm", "--", "-a")
    assert status == 0 and out == "0"


def test_zero_divisor_and_quadratic_reports(capsys):
    status, out, _ = call(capsys, *T2T, "is-zerodivisor", "a")
    assert status == 0 and out.splitlines() == ["true", "annihilator: (1) + (-1)a"]
    status, out, _ = call(capsys, *T2T, "is-quadratic", "a")
    assert out.splitlines() == ["true", "minimal polynomial: t^2-t"]


def test_gram_determinant(capsys):
    status, out, _ = call(capsys, *T2T, "gram", "1", "a", "b", "ab")
    assert status == 0 and out.splitlines()[-1] == "det: t^4-2t^3+t^2"


def test_domain_error_exit_status(capsys):
    status, _, err = call(capsys, *T2T, "invert", "a")
    assert status == 1 and "not a unit" in err
    status, _, err = call(capsys, *T2T, "max-ideals", "t-3")
    assert status == 1


def test_usage_error_prints_grammar(capsys):
    status, _, err = call(capsys, "eval", "a +")
    assert status == 2 and "column 4" in err and "expr    :=" in err
    status, _, err = call(capsys, "--field", "fp:4", "eval", "a")
    assert status == 2
    status, _, _ = call(capsys, "no-such-command")
    assert status == 2


def test_structure_commands(capsys):
    status, out, _ = call(capsys, "--field", "fp:2", "--p", "t^2", "--q", "t^2", "radical", "t")
    assert status == 0 and out.splitlines()[0] == "dim_R = 4"
    data = call_json(capsys, *T2T, "max-ideals", "t")
    assert data["count"] == 2 and len(data["ideals"]) == 2 and data["star_swapped"]
    data = call_json(capsys, "--field", "fp:2", "laffey")
    assert data["possible"] is False
    data = call_json(capsys, "--field", "fp:5", "laffey")
    assert data["possible"] is True and data["span_dimension"] == 4


def test_automorphism_commands(capsys):
    status, out, _ = call(capsys, *T2T, "basic-auts")
    assert status == 0 and out.splitlines()[0] == "order 8"
    data = call_json(capsys, *T2T, "decompose-aut", "b", "a")
    assert data["basic"]["orientation"] == "negative"
    status, _, err = call(capsys, *T2T, "decompose-aut", "a", "a")
    assert status == 1


def test_json_outputs(capsys):
    assert call_json(capsys, *T2T, "norm", "a") == {"coeffs": [], "text": "0"}
    data = call_json(capsys, *T2T, "retrace", "a")
    assert data["status"] == "success" and data["basic_result"]["xa"] == ["1"]
    data = call_json(capsys, "--p", "t^2", "--q", "t^2-t", "refined-retrace", "w*a")
    assert data["status"] == "failure" and data["reason"] == "special-degenerate"
    data = call_json(capsys, "--q", "t^2", "factor-unit", "(1+a*(-w+b)')*(1+w*b)")
    assert [f["kind"] for f in data["factors"]] == ["semibasic", "semibasic"]
    data = call_json(capsys, "--p", "t^2+1", "--q", "t^2+1", "split-witness", "--", "t-1")
    assert data["witness"] is None and data["unknown"] is True


def test_batch(tmp_path, capsys):
    script = tmp_path / "session.txt"
    script.write_text("let x = 1+a   # a unit\nnorm $x\ninvert $x\n\nword-mul 2.abab+3.aba ab+b\n")
    status, out, _ = call(capsys, *T2T, "batch", str(script))
    assert status == 0
    assert out.splitlines() == ["2", "(1) + (-1/2)a + (0)b + (0)ab", "2.ababab+8.abab"]
    bad = tmp_path / "bad.txt"
    bad.write_text("norm a\ninvert a\n")
    status, _, err = call(capsys, *T2T, "batch", str(bad))
    assert status == 1 and "line 2" in err


@pytest.mark.skipif(shutil.which("hamilton") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["hamilton", "--p", "t^2+1", "--q", "t^2+1", "lambda"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "t^2-4"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hamilton.cli", "lambda"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "t^2-t"
