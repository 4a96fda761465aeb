import json
import subprocess
import sys

import jsonschema

from tupleval import schema
from tupleval.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_entails_exit_codes(capsys):
    code, out, _ = run(capsys, "entails", "--semantics", "tuple", "--n", "2", "--mode", "tolerant", "p, ~p |- q")
    assert code == 1
    assert "countermodel" in out and "p = 01" in out and "~p = 10" in out
    assert run(capsys, "entails", "--semantics", "three", "--mode", "st", "p, ~p |- q")[0] == 0
    code, _, err = run(capsys, "entails", "--mode", "tolerant", "p & |- q")
    assert code == 2 and "^" in err


def test_entails_defaults_are_classical(capsys):
    assert run(capsys, "entails", "p, ~p |- q")[0] == 0
    assert run(capsys, "entails", "|- p | ~p")[0] == 0
    assert run(capsys, "entails", "p | q |- p")[0] == 1


def test_entails_first_order(capsys):
    code, out, _ = run(capsys, "entails", "--semantics", "tuple", "--mode", "bossy",
                       "exists x. P(x) |- forall x. P(x)")
    assert code == 1 and "domain: {0, 1}" in out
    code, out, _ = run(capsys, "entails", "--max-domain", "3", "forall x. P(x) |- P(c)")
    assert code == 0 and "domains up to 3" in out


def test_entails_budget(capsys, monkeypatch):
    monkeypatch.setenv("TUPLEVAL_BUDGET", "100")
    code, _, err = run(capsys, "entails", "--semantics", "tuple", "forall x. exists y. R(x, y) |- R(c, c)")
    assert code == 3 and "budget" in err


def test_entails_json_validates(capsys):
    for argv in (
        ["--semantics", "tuple", "--mode", "tolerant", "p, ~p |- q"],
        ["--semantics", "three", "--mode", "k3", "|- p | ~p"],
        ["--semantics", "tuple", "--n", "3", "--mode", "st", "exists x. P(x) |- P(c)"],
        ["forall x. P(x) |- P(c)"],
    ):
        code, out, _ = run(capsys, "entails", "--json", *argv)
        data = json.loads(out)
        jsonschema.validate(data, schema("verdict"))
        assert data["valid"] == (code == 0)


def test_countermodel_json_replays(capsys, tmp_path):
    _, out, _ = run(capsys, "entails", "--json", "--semantics", "three", "--mode", "lp",
                    "exists x. P(x) & ~P(x) |- forall x. P(x)")
    cm = json.loads(out)["countermodel"]
    model = {k: cm[k] for k in ("domain_size", "constants", "predicates")}
    model["semantics"] = "three"
    jsonschema.validate(model, schema("interpretation"))
    path = tmp_path / "m.json"
    path.write_text(json.dumps(model))
    for text, value in cm["formula_values"].items():
        code, out, _ = run(capsys, "eval", "--json", "--mode", "lp", "--model", str(path), text)
        assert code == 0 and json.loads(out)["value"] == value


def test_table_commands(capsys):
    code, out, _ = run(capsys, "table", "--semantics", "tuple", "--n", "2", "~p")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2 + 4
    assert lines[2].split() == ["00", "11", "yes"]
    assert lines[-1].split() == ["11", "00", "no"]
    code, out, _ = run(capsys, "table", "--semantics", "three", "p & q")
    assert len(out.strip().splitlines()) == 2 + 9
    code, out, _ = run(capsys, "table", "p")
    assert [l.split() for l in out.strip().splitlines()[2:]] == [["0", "0", "no"], ["1", "1", "yes"]]
    code, out, _ = run(capsys, "table", "--json", "--semantics", "tuple", "--mode", "st", "p")
    rows = json.loads(out)["rows"]
    assert [(r["premise_designated"], r["designated"]) for r in rows][:2] == [(False, False), (False, True)]
    assert run(capsys, "table", "P(c)")[0] == 2


def test_parse_command(capsys):
    code, out, _ = run(capsys, "parse", "p&q|r")
    assert code == 0 and out.strip() == "p & q | r"
    code, out, _ = run(capsys, "parse", "--json", "forall x. R(x, y)")
    data = json.loads(out)
    assert data["free_variables"] == ["y"] and data["signature"]["predicates"] == {"R": 2}
    assert run(capsys, "parse", "p |- ")[0] == 2


def test_eval_command(capsys):
    code, out, _ = run(capsys, "eval", "--semantics", "tuple", "--assign", "p=10", "p & ~p")
    assert code == 0 and out.startswith("p & ~p = 01")
    code, out, _ = run(capsys, "eval", "--assign", "p=1/2", "p | ~p")
    assert "1/2" in out and "designated under lp" in out
    code, out, _ = run(capsys, "eval", "--assign", "p=1", "p & ~p")
    assert "not designated under classical" in out
    assert run(capsys, "eval", "--assign", "p", "p")[0] == 2
    assert run(capsys, "eval", "P(x)")[0] == 2


def test_explain_command(capsys):
    assert run(capsys, "explain", "10")[1].strip() == "true, but also false"
    out = run(capsys, "explain", "10", "--scheme", "respects", "--labels", "gender,the stereotype",
              "--predicate", "a man")[1]
    assert out.strip() == "a man according to gender, but not according to the stereotype"
    assert "(unanimously true)" in run(capsys, "explain", "111", "--scheme", "agents")[1]
    assert run(capsys, "explain", "101")[0] == 2


def test_verify_theorems(capsys):
    code, out, _ = run(capsys, "verify", "theorems", "--n", "2", "--depth", "2", "--atoms", "2")
    assert code == 0 and out.strip().endswith("PASS")
    assert "(100.00% agreement)" in out
    assert run(capsys, "verify", "theorems", "--n", "1")[0] == 2


def test_verify_lemmas_and_report(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "lemmas", "--n", "3", "--domains", "2", "--samples", "1000", "--seed", "7"]
    assert run(capsys, *argv, "--report", str(a))[0] == 0
    assert run(capsys, *argv, "--report", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    jsonschema.validate(data, schema("report"))
    assert all(r["seed"] == 7 and r["checked"] == 1000 for r in data["reports"])


def test_verify_json_validates(capsys):
    code, out, _ = run(capsys, "verify", "theorems", "--json", "--n", "2", "--depth", "1",
                       "--fo-samples", "5")
    assert code == 0
    jsonschema.validate(json.loads(out), schema("report"))


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "entails", "--semantics", "tuple", "--mode", "lp", "p |- p")[0] == 2
    assert run(capsys, "entails", "--mode", "bossy", "p |- p")[0] == 2
    assert run(capsys, "entails", "--semantics", "tuple", "--n", "0", "p |- p")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tupleval", "entails", "p |- p"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("valid")
