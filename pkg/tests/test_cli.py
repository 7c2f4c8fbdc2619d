import json

import pytest
from click.testing import CliRunner

from artifact import suites
from artifact.arcspace import highest_weight_vectors
from artifact.cli import main
from artifact.colored import b_element_from_json, b_element_to_json, b_space, isotypic_project
from artifact.johnson import Endo, k_generator


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args))


def test_dims_examples(runner):
    r = run(runner, "dims", "--d", "3", "--k", "2", "--n", "3")
    assert r.exit_code == 0
    out = json.loads(r.output)
    assert out["dim_D"] == 8 and out["dim_B"] == 42 and out["dim_A"] == 111
    assert json.loads(run(runner, "dims", "--d", "1", "--k", "0", "--n", "1").output)["dim_B"] == 1
    out = json.loads(run(runner, "dims", "--d", "5", "--k", "4", "--connected").output)
    # S^(4,2) + S^(2^3) + S^(3,1^3): 9 + 5 + 10
    assert out["dim_Dc"] == 24


def test_dims_exit_codes(runner):
    assert run(runner, "dims", "--d", "0", "--k", "0").exit_code == 2
    assert run(runner, "dims", "--k", "0").exit_code == 2
    r = run(runner, "--no-cache", "dims", "--d", "3", "--k", "0", "--n", "3", "--budget", "10")
    assert r.exit_code == 3


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_bracket_identity_is_zero(runner, tmp_path):
    space = b_space(2, 0, 2)
    u = {space.basis[0]: 1}
    endo = write(tmp_path, "id.json", Endo.identity(2).to_json())
    elem = write(tmp_path, "u.json", b_element_to_json(u))
    r = run(runner, "bracket", "--d", "2", "--k", "0", "--n", "2", "--endo", endo, "--element", elem, "--r", "1")
    assert r.exit_code == 0
    header, body = r.output.strip().split("\n")
    assert json.loads(header)["convention"].startswith("[u, f] = (-1)^r")
    assert json.loads(body) == []


def test_bracket_hits_isotypic_component(runner, tmp_path):
    src = b_space(3, 0, 3)
    u = highest_weight_vectors(3, 0, 3, (2, 2, 2))[0]
    endo = write(tmp_path, "k.json", k_generator(1, 3, 2, n=3).to_json())
    elem = write(tmp_path, "u.json", b_element_to_json(u))
    r = run(runner, "bracket", "--d", "3", "--k", "0", "--n", "3", "--endo", endo, "--element", elem)
    assert r.exit_code == 0, r.output
    header, body = r.output.strip().split("\n")
    assert json.loads(header)["r"] == 1
    dst = b_space(3, 1, 3)
    v = b_element_from_json(body, dst)
    assert v
    assert isotypic_project((3, 1, 1), v, dst)
    assert b_element_to_json(v) == body


def test_bracket_domain_errors(runner, tmp_path):
    space = b_space(1, 0, 2)
    elem = write(tmp_path, "u.json", b_element_to_json({space.basis[0]: 1}))
    square = write(tmp_path, "sq.json", Endo.from_strings(["x1*x1", "x2"]).to_json())
    r = run(runner, "bracket", "--d", "1", "--k", "0", "--n", "2", "--endo", square, "--element", elem)
    assert r.exit_code == 4
    k12 = write(tmp_path, "k.json", k_generator(1, 2, n=2).to_json())
    r = run(runner, "bracket", "--d", "1", "--k", "0", "--n", "2", "--endo", k12, "--element", elem, "--r", "2")
    assert r.exit_code == 4
    wrong_n = write(tmp_path, "k3.json", k_generator(1, 2, 3, n=3).to_json())
    r = run(runner, "bracket", "--d", "1", "--k", "0", "--n", "2", "--endo", wrong_n, "--element", elem)
    assert r.exit_code == 4


def test_verify_gd(runner):
    r = run(runner, "verify", "gd")
    assert r.exit_code == 0
    report = json.loads(r.output)
    assert report["suite"] == "gd" and report["version"] and report["convention_hash"]
    assert all(c["status"] == "pass" for c in report["cases"])
    assert {c["id"] for c in report["cases"]} >= {f"G_{d} connected" for d in range(2, 13)}


def test_verify_fbn_and_th91(runner):
    r = run(runner, "verify", "fbn", "--max-d", "4")
    assert r.exit_code == 0
    assert len(json.loads(r.output)["cases"]) == 10
    r = run(runner, "verify", "th91", "--d", "2", "--n", "3", "--samples", "20")
    assert r.exit_code == 0
    assert len(json.loads(r.output)["cases"]) == 40


def test_verify_formats(runner):
    csv_out = run(runner, "verify", "fbn", "--max-d", "2", "--format", "csv").output.splitlines()
    assert csv_out[0] == "id,status,expected,actual,millis"
    assert csv_out[1].startswith("\"Dc[1,0]\",pass") or csv_out[1].startswith("Dc[1,0],pass")
    table = run(runner, "verify", "fbn", "--max-d", "2", "--format", "table").output
    assert "Dc[2,1]" in table and "pass" in table


def test_verify_unknown_suite(runner):
    assert run(runner, "verify", "nonsense").exit_code == 2


def test_verify_failure_exit(runner, monkeypatch):
    failing = lambda: [suites.run_case("broken", 1, lambda: 2)]
    monkeypatch.setitem(suites.SUITES, "gd", lambda **kw: failing())
    r = run(runner, "--no-cache", "verify", "gd")
    assert r.exit_code == 1
    assert json.loads(r.output)["cases"][0]["status"] == "fail"


def test_cache_hit_is_bit_identical(runner):
    cold = run(runner, "verify", "p531", "--max-d", "3")
    warm = run(runner, "verify", "p531", "--max-d", "3")
    assert cold.exit_code == warm.exit_code == 0
    assert cold.output == warm.output
    dims_cold = run(runner, "dims", "--d", "2", "--k", "0", "--n", "2").output
    assert run(runner, "dims", "--d", "2", "--k", "0", "--n", "2").output == dims_cold


def test_reports_deterministic_given_seed(runner):
    def strip(out):
        rep = json.loads(out)
        for c in rep["cases"]:
            c.pop("millis")
        return rep

    a = run(runner, "--no-cache", "verify", "johnson", "--seed", "3", "--samples", "10").output
    b = run(runner, "--no-cache", "verify", "johnson", "--seed", "3", "--samples", "10").output
    assert strip(a) == strip(b)
