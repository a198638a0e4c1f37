import json

import pytest
from fastapi.testclient import TestClient

from coideal_lab.api import app
from coideal_lab.cli import main
from coideal_lab.coefficients import default_bicharacter, multiparameter_bicharacter
from coideal_lab.pbw import u_bracket

client = TestClient(app)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- HTTP -----------------------------------------------------------------------

def test_health():
    r = client.get("/health")
    assert r.status_code == 200 and "serre" in r.json()["suites"]


def test_phi_endpoint():
    r = client.post("/phi", json={"config": {"n": 3}, "S": [1, 2, 3], "k": 1, "m": 5})
    assert r.status_code == 200
    body = r.json()
    assert "black (1,5)-regular" in body["flags"]
    assert body["scheme"]["plain"] == "0o 1* 2* 3* 4o 5*"


def test_phi_endpoint_rejects_bad_interval():
    r = client.post("/phi", json={"config": {"n": 2}, "k": 3, "m": 9})
    assert r.status_code == 422


def test_config_validation():
    r = client.post("/enumerate", json={"n": 2, "mode": "cyclotomic", "t": 4})
    assert r.status_code == 422
    r = client.post("/enumerate", json={"n": 2, "mode": "cyclotomic"})
    assert r.status_code == 422
    r = client.post("/enumerate", json={"n": 2, "degree_bound": 0})
    assert r.status_code == 422


def test_classify_endpoint():
    r = client.post("/classify", json={"config": {"n": 3}, "theta": [5, 1, 0]})
    assert r.json()["T"]["1"] == [1, 2, 3, 5, 6]


def test_coproduct_endpoint():
    r = client.post("/coproduct", json={"config": {"n": 3}, "k": 2, "m": 5})
    assert r.json()["matches"] is True


def test_lattice_endpoint():
    r = client.post("/lattice", json={"n": 2})
    assert r.json()["edges"]["0,0"] == ["0,1", "1,0"]


def test_verify_endpoint():
    r = client.post("/verify", json={"config": {"n": 2}, "suite": "serre"})
    assert r.json()["ok"] is True
    r = client.post("/verify", json={"config": {"n": 2}, "suite": "bogus"})
    assert r.status_code == 422


def test_decompose_endpoint():
    u = u_bracket(default_bicharacter(2), 1, 3)
    r = client.post("/decompose", json={"config": {"n": 2}, "element": u.to_json()})
    assert r.json()["decomposition"] == [{"monomial": [["u[1,3]", 1]], "coeff": "1"}]
    r = client.post("/decompose", json={"config": {"n": 2}})
    assert r.status_code == 422


# --- CLI ------------------------------------------------------------------------

def test_cli_phi_leading_term(capsys):
    code, out, _ = run(capsys, "phi", "--n", "2", "--S", "1", "--k", "1", "--m", "3")
    assert code == 0
    assert "leading term: u[1,3]" in out


def test_cli_phi_flags(capsys):
    code, out, _ = run(capsys, "phi", "--n", "3", "--S", "1,2,3", "--k", "1", "--m", "5")
    assert "black (1,5)-regular" in out
    assert " . 5* 4o 3* <=" in out


def test_cli_phi_letter(capsys):
    code, out, _ = run(capsys, "phi", "--n", "2", "--S", "", "--k", "1", "--m", "1", "--json")
    doc = json.loads(out)
    assert doc["value"] == {"degree": [1, 0], "terms": [{"word": [1], "coeff": "1"}]}


def test_cli_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--theta", "5,1,0", "--json")
    assert code == 0
    assert json.loads(out)["T"]["1"] == [1, 2, 3, 5, 6]


def test_cli_enumerate_rows(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    rows = [line for line in out.splitlines() if line.startswith("(")]
    assert len(rows) == 8


def test_cli_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "serre")
    assert code == 0 and "PASS" in out


def test_cli_verify_several_suites_in_order(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "serre,coproduct")
    heads = [line for line in out.splitlines() if line.startswith("[")]
    assert heads == ["[serre] PASS", "[coproduct] PASS"]


def test_cli_bad_input(capsys):
    assert run(capsys, "phi", "--n", "2", "--k", "3", "--m", "9")[0] == 2
    assert run(capsys, "classify", "--n", "2", "--theta", "9,9")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "phi", "--mode", "cyclotomic", "--t", "3", "--k", "1", "--m", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["phi", "--k", "x", "--m", "1"])
    assert exc.value.code == 2


def test_cli_verify_failure_exit_code(capsys, monkeypatch):
    from coideal_lab import checks

    def broken(name, bc, degree_bound=8):
        res = checks.CheckResult("always fails")
        res.expect(False, "counterexample 42")
        return [res]

    monkeypatch.setattr("coideal_lab.service.run_suite", broken)
    code, out, _ = run(capsys, "verify", "--n", "2", "--suite", "serre")
    assert code == 1
    assert "counterexample 42" in out


def test_cli_output_is_deterministic(capsys):
    first = run(capsys, "phi", "--n", "3", "--S", "2", "--k", "2", "--m", "6", "--json")[1]
    second = run(capsys, "phi", "--n", "3", "--S", "2", "--k", "2", "--m", "6", "--json")[1]
    assert first == second
    doc = json.loads(first)
    assert json.dumps(doc, sort_keys=True, indent=2) == first.strip()


def test_cli_bicharacter_file(tmp_path, capsys):
    path = tmp_path / "bc.json"
    path.write_text(json.dumps(multiparameter_bicharacter(2).to_json()))
    code, out, _ = run(capsys, "coproduct", "--n", "2", "--k", "1", "--m", "3", "--bicharacter", str(path))
    assert code == 0 and "matches" in out
    code, _, err = run(capsys, "coproduct", "--n", "2", "--k", "1", "--m", "3",
                       "--bicharacter", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_cli_decompose_element_file(tmp_path, capsys):
    u = u_bracket(default_bicharacter(2), 1, 2)
    path = tmp_path / "el.json"
    path.write_text(json.dumps(u.to_json()))
    code, out, _ = run(capsys, "decompose", "--n", "2", "--element", str(path))
    assert code == 0 and "leading term: u[1,2]" in out


def test_cli_cyclotomic_phi(capsys):
    code, out, _ = run(capsys, "phi", "--mode", "cyclotomic", "--t", "5", "--S", "1", "--k", "1", "--m", "3")
    assert code == 0 and "leading term: u[1,3]" in out


def test_cli_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "--n", "2")
    assert "(0,0) -> (0,1) (1,0)" in out
