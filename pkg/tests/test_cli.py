import json
import subprocess
import sys

import pytest

from qintval.cli import main
from qintval.exactalg import parse_laurent
from qintval.rq_core import QBinExpansion, struct_const


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dilate_golden(capsys):
    code, out, _ = run(capsys, "dilate", "2", "3", "--json")
    assert code == 0
    e = QBinExpansion.from_json(out)
    assert sorted(e.coeffs) == [2, 3, 4, 5, 6]
    assert e.get(2) == parse_laurent("1 + q + q^2 + q^3")
    delta = parse_laurent("q") * parse_laurent("1 + q") * parse_laurent("1 + q^2") * parse_laurent("q^5 + q^3 + q^2 - 1")
    assert e.get(3) == delta


def test_mult_prints_structure_constants(capsys):
    code, out, _ = run(capsys, "mult", "3", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == [f"k={k}: {c}" for k, c in sorted(struct_const(3, 3).items())]


def test_bijection_trace(capsys):
    code, out, err = run(capsys, "bijection", "14", "7", "6", "(7,6,5,5,2,2,1)", "(8,7,6,4,2,1)")
    assert code == 0 and not err
    lines = out.splitlines()
    assert "k=10" in lines
    assert "alpha=(4,4,4,3,3,3,2,2,2,1)" in lines
    assert "beta=(3,2,2,2)" in lines
    assert "gamma=(3,2,1,1)" in lines


def test_bijection_swaps_with_notice(capsys):
    code, out, err = run(capsys, "bijection", "14", "6", "7", "(8,7,6,4,2,1)", "(7,6,5,5,2,2,1)")
    assert code == 0
    assert "swapping" in err
    assert "k=10" in out.splitlines()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["expand", "x^2"], "k=1: 1\nk=2: q + q^2\n"),
        (["bar", "2"], "k=1: q^3\nk=2: q^5\n"),
        (["convert", "1", "--basis", "bar"], "k=1: -q\n"),
        (["shift", "1", "1"], "k=0: 1\nk=1: q\n"),
        (["frob", "2", "1"], "k=2: 1\n"),
        (["qfrob", "2", "1"], "k=2: 1\n"),
        (["qfrob", "2", "4", "--inverse"], "k=2: 1\n"),
        (["eval", "2", "--at", "4", "--kappa", "2"], "35\n"),
        (["eval", "2", "--at", "4"], "1 + q + 2*q^2 + q^3 + q^4\n"),
    ],
)
def test_text_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_eval_with_hom_spec(capsys):
    spec = {"case": "generic", "target": {"kind": "rationals"}, "params": {"kappa": "1/2", "t": 2}}
    code, out, _ = run(capsys, "eval", "3: q^6", "--hom", json.dumps(spec))
    assert code == 0
    assert out.strip() == "1/21"


def test_eval_hom_from_file(capsys, tmp_path):
    path = tmp_path / "hom.json"
    path.write_text(json.dumps({"case": "q0", "target": {"kind": "rationals"}, "params": {"k": 2}}))
    code, out, _ = run(capsys, "eval", "3", "--hom", f"@{path}")
    assert code == 0 and out.strip() == "0"


def test_qlucas_agrees(capsys):
    code, out, _ = run(capsys, "qlucas", "5", "2", "2")
    assert code == 0
    assert out.splitlines()[-1] == "agree: yes"


def test_json_output_is_parseable(capsys):
    code, out, _ = run(capsys, "shift", "2", "-1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "standard"
    code, out, _ = run(capsys, "frob", "3", "1: 2", "--json")
    assert json.loads(out)["mod"] == "p:3"


@pytest.mark.parametrize(
    "argv",
    [
        ["nosuch"],
        ["mult", "3"],
        ["frob", "4", "1"],
        ["shift", "1", "one"],
        ["expand", "x^"],
        ["bijection", "5", "2", "1", "(9)", "()"],
        ["eval", "1", "--hom", "{bad json"],
        ["verify", "nosuch"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "exactalg")
    assert code == 0
    assert out.splitlines()[-1].endswith("0 failed")


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


@pytest.mark.parametrize("argv", [["dilate", "2", "3"], ["mult", "4", "2", "--json"], ["bar", "3", "--basis", "bar"]])
def test_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qintval", "mult", "1", "1"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    assert proc.stdout == "k=1: 1\nk=2: q + q^2\n"
