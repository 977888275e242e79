import json
import subprocess
import sys

import jsonschema
import pytest

from geonum.cli import CliConfig, load_schema, main, run


def cli(*args):
    proc = subprocess.run([sys.executable, "-m", "geonum", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_examples():
    assert cli("classify", "--p", "3", "--q", "2") == (0, "M4(2R)\n", "")
    assert cli("eval", "--p", "1", "--q", "2", "rev(1+2*e1-3*f12)")[:2] == (0, "1 + 2*e1 + 3*f12\n")
    code, out, _ = cli("verify", "--p", "2", "--q", "2", "--samples", "50", "--seed", "7")
    assert code == 0 and out.strip().endswith("all checks passed")


def test_validation_exit_codes():
    code, out, err = cli("eval", "--p", "1", "--q", "1", "e1*f9")
    assert code == 1 and err.startswith("error: 1:4:")
    assert cli("bogus")[0] == 1
    assert cli("classify", "--p", "x")[0] == 1
    assert cli("verify", "--samples", "0")[0] == 1
    assert cli("iso", "--kind", "shift4", "--p", "2")[0] == 1
    assert cli("classify", "--p", "9", "--q", "9")[0] == 1


def test_dim_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("GA_DIM_CAP", "3")
    assert main(["classify", "--p", "2", "--q", "2"]) == 1
    monkeypatch.setenv("GA_DIM_CAP", "20")
    assert main(["classify", "--p", "7", "--q", "7"]) == 0
    assert capsys.readouterr().out.strip() == "M128(R)"


def test_failed_verification_exits_2(monkeypatch):
    import geonum.cli as mod
    from geonum.isomorphisms import Check, MapReport

    monkeypatch.setattr(mod, "verify_map", lambda m, **kw: MapReport("x", [Check("squares", "fail", "w")]))
    code, out = run(CliConfig("iso", p=1, q=1))
    assert code == 2 and "FAIL" in out


def test_deterministic():
    args = ("verify", "--p", "1", "--q", "2", "--samples", "10", "--seed", "99", "--json")
    assert cli(*args) == cli(*args)
    a = run(CliConfig("iso", p=2, q=1, kind="swap", seed=3, format="json"))
    b = run(CliConfig("iso", p=2, q=1, kind="swap", seed=3, format="json"))
    assert a == b


@pytest.mark.parametrize("args,schema", [
    (["table", "--json"], "table1"),
    (["table", "--complex", "--json"], "table4"),
    (["table", "--which", "clock", "--json"], "clock"),
    (["clock", "--p", "3", "--q", "2", "--json"], "clock_walk"),
    (["classify", "--p", "0", "--q", "4", "--json"], "shape"),
    (["classify", "--p", "3", "--complex", "--json"], "shape"),
    (["rep", "--p", "0", "--q", "3", "--json", "1/2 + f123"], "blockmatrix"),
    (["rep", "--p", "1", "--q", "2", "--k", "1", "--json", "f2 + 1/3"], "null_matrix"),
    (["rep", "--p", "2", "--q", "2", "--k", "2", "--json", "e1"], "null_matrix"),
    (["iso", "--kind", "shift4", "--p", "4", "--q", "1", "--json"], "iso_report"),
    (["verify", "--p", "1", "--q", "1", "--samples", "5", "--k", "1", "--json"], "verify_report"),
    (["eval", "--p", "1", "--json", "1/2*e1"], "eval"),
])
def test_json_outputs_validate(args, schema, capsys):
    assert main(args) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, load_schema(schema))


def test_text_outputs(capsys):
    assert main(["table"]) == 0
    text = capsys.readouterr().out
    assert "M4(2R)" in text and "i^2" in text
    assert main(["clock", "--p", "3", "--q", "2"]) == 0
    assert "G(3,2) = M4(2R)" in capsys.readouterr().out
    assert main(["rep", "--p", "0", "--q", "2", "f1"]) == 0
    assert capsys.readouterr().out == "Q\n[ 0+1i+0j+0k ]\n"
    assert main(["iso", "--kind", "evensub", "--p", "0", "--q", "2"]) == 0
    assert "even_subalgebra" in capsys.readouterr().out


def test_rep_k_signature_mismatch():
    code, out = run(CliConfig("rep", p=2, q=0, k=1), "e1")
    assert code == 1 and out.startswith("error:")
