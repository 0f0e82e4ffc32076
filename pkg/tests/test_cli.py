import subprocess
import sys

import pytest

from diophc.cli import main

SUM0 = """;; diophc v1
(language (consts 0 1) (funcs (+ 2) (* 2)) (rels))
(def (free 2) (exist 0) (atoms (= (+ x1 x2) 0)))
"""
EVENS = ";; diophc v1\n(def (free 1) (exist 1) (atoms (= (+ x2 x2) x1)))\n"
TRIPLES = ";; diophc v1\n(def (free 1) (exist 1) (atoms (= (+ (+ x2 x2) x2) x1)))\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("sum0", SUM0), ("evens", EVENS), ("triples", TRIPLES)):
        p = tmp_path / f"{name}.dsys"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_encode_decode(capsys):
    assert run(capsys, "encode", "--lang", "LR", "--term", "(+ x1 0)")[:2] == (0, "172800\n")
    assert run(capsys, "decode", "--code", "172800")[:2] == (0, "(+ x1 0)\n")
    code, out, _ = run(capsys, "decode", "--codes", "1 0 8 4")
    assert code == 0 and "(atoms (= x1 0))" in out


def test_encode_system(capsys, files):
    code, out, _ = run(capsys, "encode", "--system", files["sum0"])
    assert code == 0 and out.split()[0] == "1"


def test_check(capsys, files, tmp_path):
    assert run(capsys, "check", "--system", files["sum0"])[:2] == (0, "ok\n")
    bad = tmp_path / "bad.dsys"
    bad.write_text(";; diophc v1\n(def (free 1) (exist 0) (atoms (= x4 0)))\n")
    code, out, _ = run(capsys, "check", "--system", str(bad))
    assert code == 1 and "out of range" in out


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.dsys"
    bad.write_text("(def (free 1")
    code, _, err = run(capsys, "check", "--system", str(bad))
    assert code == 1 and err.startswith("error:")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_algebra_and_points(capsys, files, tmp_path):
    code, out, _ = run(capsys, "algebra", "intersect", files["evens"], files["triples"])
    assert code == 0
    both = tmp_path / "six.dsys"
    both.write_text(out)
    code, out, _ = run(capsys, "points", "--interp", "int", "--system", str(both), "--box", "25", "--exist-box", "25")
    assert code == 0
    assert out.splitlines()[:-1] == ["0", "6", "-6", "12", "-12"]
    code, out, _ = run(capsys, "algebra", "finite-set", "--interp", "int", "--points", "2; 5")
    assert code == 0 and "(atoms" in out
    code, _, err = run(capsys, "algebra", "union", files["evens"], files["evens"], "--interp", "zmod 6")
    assert code == 1 and "integral domain" in err


def test_translate_and_verify(capsys, files):
    code, out, _ = run(capsys, "translate", "--map", "shift:1", "--system", files["sum0"])
    assert code == 0 and out.startswith(";; diophc v1")
    code, out, _ = run(capsys, "verify", "--map", "shift:1", "--system", files["sum0"], "--box", "17")
    assert code == 0 and out.splitlines() == ["PASS condition-1", "PASS condition-2"]
    code, out, _ = run(capsys, "translate", "--map", "shift:1", "--codes", "1 0 8 4", "--format", "codes")
    assert code == 0 and out.split()[0] == "6"


def test_verify_set_equality(capsys, files):
    code, out, _ = run(capsys, "verify", "--interp", "int", "--system", files["evens"], "--against",
                       files["triples"], "--box", "9")
    assert code == 1 and out.startswith("FAIL set-equality")


def test_solve(capsys, files):
    assert run(capsys, "solve", "--interp", "int", "--system", files["sum0"])[:2] == (0, "witness 0 0\n")


def test_stdlib(capsys):
    code, out, _ = run(capsys, "stdlib", "list")
    assert code == 0 and "z2-in-z6" in out
    code, out, _ = run(capsys, "stdlib", "show", "shift:1")
    assert code == 0 and "(map shift:1" in out
    assert run(capsys, "stdlib", "show", "nope")[0] == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "diophc", "encode", "--term", "x1"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "8\n"
