import subprocess
import sys
from pathlib import Path

import pytest

from hcyl.cli import main

HERE = Path(__file__).parent
ROOT = HERE.parent


def load_cases():
    out = []
    for line in (HERE / "golden" / "cases.txt").read_text().splitlines():
        name, code, cmd = line.split("\t")
        out.append((name, int(code), cmd))
    return out


@pytest.fixture(autouse=True)
def _cwd(monkeypatch):
    monkeypatch.chdir(ROOT)


@pytest.mark.parametrize("name, code, cmd", load_cases(), ids=[c[0] for c in load_cases()])
def test_golden(name, code, cmd, capsys):
    rc = main(cmd.split())
    out = capsys.readouterr().out
    assert out == (HERE / "golden" / f"{name}.out").read_text()
    assert rc == code


def test_every_line_is_key_value(capsys):
    for _, _, cmd in load_cases():
        main(cmd.split())
        for line in capsys.readouterr().out.splitlines():
            key, sep, _ = line.partition(": ")
            assert sep and key and " " not in key


@pytest.mark.parametrize(
    "argv",
    [
        ["eta", "tests/fixtures/bad_coords.txt"],
        ["eta", "tests/fixtures/missing.txt"],
        ["beta", "tests/fixtures/slide_left.txt", "--form", "1"],
        ["rochlin", "tests/fixtures/slide_left.txt", "--form", "2x"],
        ["equivalent", "tests/fixtures/slide_left.txt", "tests/fixtures/empty_g2.txt"],
        ["equivalent", "tests/fixtures/symplectic_g1.txt", "tests/fixtures/empty_g1.txt"],
        ["structure", "--genus", "-1"],
        ["structure", "--genus", "1", "--case", "open"],
        ["nonsense"],
        [],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().out == ""


def test_parse_error_names_the_line(capsys):
    main(["eta", "tests/fixtures/bad_coords.txt"])
    assert "line 3" in capsys.readouterr().err


def test_selftest_small(capsys):
    assert main(["selftest", "--genus", "1", "--seed", "3", "--samples", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[-1] == "result: pass"


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "hcyl.cli", "structure", "--genus", "2", "--case", "closed"],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    assert r.returncode == 0
    assert "torsion_count: 10" in r.stdout
    assert "routes_agree: yes" in r.stdout
