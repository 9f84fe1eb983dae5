import subprocess
import sys

import pytest

from baxterlab import formats
from baxterlab.baxter import parse_permutation
from baxterlab.cli import main


def run(capsys, *argv):
    code = main(["-q", *argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, want",
    [
        (["count", "baxter", "--n", "8"], "10754"),
        (["count", "theta", "--k", "1", "--l", "2"], "10"),
        (["count", "theta-symmetric", "--k", "1", "--l", "1"], "0"),
        (["count", "catalan", "--n", "6"], "132"),
        (["count", "narayana", "--n", "3", "--k", "2"], "3"),
        (["count", "schnyder", "--n", "3"], "14"),
        (["count", "alternating-baxter", "--n", "3"], "2"),
    ],
)
def test_count(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == want


def test_count_errors(capsys):
    assert run(capsys, "count", "fibonacci", "--n", "3")[0] == 2
    code, _, err = run(capsys, "count", "theta", "--k", "1")
    assert code == 2 and "--l" in err


def test_convert_figure(tmp_path, capsys):
    src = tmp_path / "pi.txt"
    src.write_text("1,7,4,6,3,2,5\n")
    dst = tmp_path / "pair.txt"
    code, _, _ = run(capsys, "convert", "--from", "baxter", "--to", "twinpair", "--in", str(src), "--out", str(dst))
    assert code == 0
    want, _ = formats.convert(parse_permutation("1,7,4,6,3,2,5"), "baxter", "twinpair")
    assert dst.read_text() == formats.serialize("twinpair", want)
    code, out, _ = run(capsys, "convert", "--from", "twinpair", "--to", "baxter", "--in", str(dst))
    assert code == 0 and out == "1,7,5,6,3,2,4\n"


def test_convert_logs_path(tmp_path, capsys):
    src = tmp_path / "pi.txt"
    src.write_text("2,1\n")
    code = main(["convert", "--from", "baxter", "--to", "triple", "--in", str(src)])
    _, err = capsys.readouterr()
    assert code == 0 and "conversion path: baxter -> twinpair -> triple" in err


def test_convert_errors(tmp_path, capsys):
    src = tmp_path / "bad.txt"
    src.write_text("2,4,1,3\n")
    code, _, err = run(capsys, "convert", "--from", "baxter", "--to", "rect", "--in", str(src))
    assert code == 2 and "NotConvertible" in err
    src.write_text("1,1\n")
    assert run(capsys, "convert", "--from", "baxter", "--to", "rect", "--in", str(src))[0] == 2
    assert run(capsys, "convert", "--from", "baxter", "--to", "rect", "--in", str(tmp_path / "missing"))[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "alternating-baxter", "--n", "3")
    assert code == 0 and out == "1,3,2\n2,3,1\n"
    code, out, _ = run(capsys, "enumerate", "baxter", "--n", "4", "--limit", "5")
    assert len(out.splitlines()) == 5
    code, out, _ = run(capsys, "enumerate", "binary-trees", "--n", "4")
    assert len(out.splitlines()) == 5
    code, out, _ = run(capsys, "enumerate", "triples", "--k", "1", "--l", "1")
    assert code == 0 and len([b for b in out.split("\n\n") if b.strip()]) == 4
    assert run(capsys, "enumerate", "baxter", "--n", "12")[0] == 2
    assert run(capsys, "enumerate", "graphs", "--n", "3")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "pyramid")
    assert code == 0
    assert out.splitlines()[-1] == "3/3 checks passed"
    assert run(capsys, "verify", "nonsense")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from baxterlab import suites

    monkeypatch.setitem(suites.SUITES, "broken", lambda: [suites.Check("always", False, "forced", "1,2\n")])
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 3
    assert "FAIL always: forced" in out and "    1,2" in out


def test_render(tmp_path, capsys):
    src = tmp_path / "square.txt"
    src.write_text("")
    dst = tmp_path / "square.svg"
    assert run(capsys, "render", "--in", str(src), "--out", str(dst))[0] == 0
    assert dst.read_text().count("<rect ") == 1
    src.write_text("1,2\n")
    code, _, err = run(capsys, "render", "--in", str(src))
    assert code == 2 and "NotRenderable" in err


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "baxterlab.cli", "-q", "count", "baxter", "--n", "5"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout.strip() == "92"
