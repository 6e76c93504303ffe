import io
import json
import os
import shutil
import subprocess
import sys

import pytest

from brauerdm.cli import run
from brauerdm.valley import PREFIX_ENV


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_odelta():
    assert call("odelta", "--delta", "2", "--partition", "7.7.6.5.3.2") == (0, "{1,3,5,6}\n", "")
    assert call("odelta", "--delta", "2", "--partition", "-")[1] == "{}\n"


def test_klrow():
    code, out, _ = call("klrow", "--set", "3,4")
    assert code == 0 and out == "34:0 24:1 13:1 12:2\n"
    assert call("klrow", "--set", "3,4", "--via", "2,4")[1] == out
    code, out, _ = call("klrow", "--table", "4")
    assert code == 0 and out.splitlines()[0].split() == ["-", "12", "13", "14", "23", "24", "34", "1234"]


def test_decomp_module_csv_delta0():
    code, out, _ = call("decomp", "--delta", "0", "--n", "4", "--convention", "module", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()]
    header = rows[0]
    by_label = {r[0]: dict(zip(header[1:], r[1:])) for r in rows[1:]}
    assert "-" not in by_label
    assert {k for k, v in by_label["2"].items() if v == "1"} == {"2", "-"}
    assert {k for k, v in by_label["3.1"].items() if v == "1"} == {"3.1", "2"}


def test_decomp_row_json():
    code, out, _ = call("decomp", "--delta", "2", "--partition", "7.7.6.5.3.2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["depths"] == [0, 1, 1, 1, 2, 2, 2, 3]


def test_cartan_and_blocks():
    code, out, _ = call("cartan", "--delta", "0", "--n", "4", "--format", "json")
    data = json.loads(out)
    i, j = data["labels"].index("2"), data["labels"].index("3.1")
    assert code == 0 and data["entries"][i][i] == 2 and data["entries"][i][j] == 1
    code, out, _ = call("blocks", "--delta", "2", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 4
    code, out, _ = call("blocks", "--delta", "2", "--n", "2")
    assert code == 0 and out.count("block ") == 3


def test_block_and_hypercube():
    code, out, _ = call("block", "--delta", "2", "--partition", "2.2", "--n", "4")
    assert code == 0 and "1.1\t" in out
    code, out, _ = call("block", "--delta", "2", "--partition", "-", "--radius", "1")
    assert code == 0 and out.splitlines()[0] == "-\t{}"
    code, out, _ = call("hypercube", "--set", "1,3,5,6")
    assert code == 0 and "word 101011" in out and "tl (1 6) (2 3) (4 5)" in out
    code, out, _ = call("hypercube", "--delta", "2", "--partition", "7.7.6.5.3.2")
    assert code == 0 and "2\t1246\t7.6.5.5.2.1" in out


def test_usage_errors():
    code, _, err = call("odelta", "--delta", "0.5", "--partition", "2")
    assert code == 2
    assert call("hypercube")[0] == 2
    assert call("decomp", "--delta", "2")[0] == 2
    assert call("decomp", "--delta", "2", "--n", "2", "--format", "xml")[0] == 2
    assert call("odelta", "--delta", "2", "--partition", "1.2")[0] == 2
    assert call()[0] == 2


def test_semisimplicity_note(capsys):
    code = run(["odelta", "--delta", "1/2", "--partition", "2"])
    assert code == 2
    assert "semisimple" in capsys.readouterr().err


def test_prefix_override(monkeypatch):
    monkeypatch.delenv(PREFIX_ENV, raising=False)
    plain = call("odelta", "--delta", "2", "--partition", "7.7.6.5.3.2")
    longer = call("--prefix-len", "60", "odelta", "--delta", "2", "--partition", "7.7.6.5.3.2")
    assert plain == longer
    assert PREFIX_ENV not in os.environ


def test_verify_and_selftest():
    code, out, _ = call("verify", "--suite", "all", "--max-n", "4")
    assert code == 0 and out.strip().endswith("checks passed")
    code, out, _ = call("selftest")
    assert code == 0 and "FAIL" not in out and out.count("PASS") >= 20


@pytest.mark.skipif(shutil.which("brauerdm") is None, reason="console script not installed")
def test_console_script_deterministic():
    argv = ["brauerdm", "decomp", "--delta", "1", "--n", "6", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brauerdm.cli", "odelta", "--delta", "0",
                           "--partition", "3.3.3.1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "{1,2}\n"
