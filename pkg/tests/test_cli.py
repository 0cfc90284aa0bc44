import io
import json
import subprocess
import sys

import jsonschema
import pytest

from dikernels.cli import run
from dikernels.verification import REPORT_SCHEMA


def call(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": call(argv, stdin, monkeypatch, capsys)


def test_gen_then_cki(cli):
    code, out, _ = cli(["gen", "--family", "circulant", "--n", "7", "--jumps", "1,2"])
    assert code == 0
    code, out, _ = cli(["cki", "-"], out)
    assert (code, out) == (0, "CKI: true\n")


def test_gen_families(cli):
    assert cli(["gen", "--family", "cycle", "--n", "3"])[1] == "&BP_\n"
    assert cli(["gen", "--family", "three-cycle-extension", "--sizes", "1,1,1"])[1] == "&BP_\n"
    code, _, err = cli(["gen", "--family", "cycle"])
    assert code == 2 and "--n" in err


def test_gen_output_file(cli, tmp_path):
    target = tmp_path / "c5.d6"
    assert cli(["gen", "--family", "antihole", "--n", "5", "-o", str(target)])[0] == 0
    code, out, _ = cli(["kernel", str(target)])
    assert (code, out) == (0, "NONE\n")


def test_check_and_kernel(cli):
    lines = "&BP_\n&CS{g\n"
    assert cli(["check", "--pred", "semicomplete", "-"], lines)[1] == "true\ntrue\n"
    assert cli(["check", "--pred", "asymmetric", "-"], lines)[1] == "true\nfalse\n"
    c4 = cli(["gen", "--family", "cycle", "--n", "4"])[1]
    assert cli(["kernel", "-"], c4)[1] == "{0,2}\n"
    assert cli(["kernel", "--all", "-"], c4)[1] == "{0,2} {1,3}\n"


def test_edge_list_input(cli):
    code, out, _ = cli(["cki", "-"], "3 3\n0 1\n1 2\n2 0\n")
    assert (code, out) == (0, "CKI: true\n")


def test_classify4t(cli):
    code, out, _ = cli(["classify4t", "-"], "&BP_\n")
    rec = json.loads(out)
    assert code == 0 and rec["label"] == 2 and rec["evidence"]["partition"] == [[0], [1], [2]]
    code, _, err = cli(["classify4t", "-"], cli(["gen", "--family", "tournament", "--n", "3"])[1])
    assert code == 2 and "not strong" in err


def test_enum(cli):
    code, out, _ = cli(["enum", "--n", "3", "--class", "all"])
    assert code == 0 and len(out.splitlines()) == 16
    _, again, _ = cli(["enum", "--n", "3", "--class", "all", "--jobs", "4"])
    assert again == out
    _, filtered, _ = cli(["enum", "--n", "5", "--class", "oriented", "--filter", "cki"])
    assert filtered.splitlines() == ["&DCD@G?"]


def test_verify_json(cli):
    code, out, _ = cli(["verify", "--suite", "4t-cki", "--max-n", "5", "--report", "json"])
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["pass"] is True and len(data["witnesses"]) == 2


def test_verify_failure_exit_code(cli):
    code, out, _ = cli(["verify", "--suite", "open-5t-cki", "--max-n", "5"])
    assert code == 1 and "FAIL" in out


def test_verify_lemma_and_list(cli):
    code, out, _ = cli(["verify", "--suite", "lemma:2at-structure", "--max-n", "4"])
    assert code == 0 and "PASS" in out
    code, out, _ = cli(["verify", "--list"])
    assert "asym-cki-lt8" in out.split() and "lemma:kqtlargediam" in out.split()


@pytest.mark.parametrize("argv,stdin", [
    (["bogus"], ""),
    (["verify", "--suite", "nope"], ""),
    (["verify"], ""),
    (["enum", "--n", "9", "--class", "all"], ""),
    (["enum", "--n", "3", "--class", "all", "--filter", "cki", "--jobs", "0"], ""),
    (["enum", "--n", "3", "--class", "all", "--filter", "nonsense"], ""),
    (["cki", "-"], "BP_\n"),
    (["cki", "-"], "&B\n"),
    (["kernel", "/nonexistent/file"], ""),
    (["gen", "--family", "circulant", "--n", "7", "--jumps", "x"], ""),
])
def test_usage_errors_exit_2(cli, argv, stdin):
    code, out, err = cli(argv, stdin)
    assert code == 2 and err.startswith("error:")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "dikernels", "gen", "--family", "cycle", "--n", "5"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "&DOOOW?\n"
