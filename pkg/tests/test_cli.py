import json
import subprocess
import sys

import pytest

from seshadri_config import catalog as cat
from seshadri_config.cli import main
from seshadri_config.io import arrangement_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_hesse_passes(capsys):
    code, out, _ = run(capsys, "check", "--catalog", "hesse_conics")
    assert code == 0 and "264 = 264" in out


def test_check_broken_tvector(tmp_path, capsys):
    data = arrangement_to_json(cat.hesse_conics())
    data["combinatorics"]["t"]["2"] = 10
    f = tmp_path / "broken.json"
    f.write_text(json.dumps(data), encoding="utf-8")
    code, out, _ = run(capsys, "check", "--file", str(f))
    assert code == 1 and "264 ≠ 262" in out


def test_check_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "check", "--file", str(tmp_path / "nope.json"))
    assert code == 2 and "$" in err


def test_check_malformed_file_names_path(tmp_path, capsys):
    data = arrangement_to_json(cat.star(1, 3))
    data["points"][1]["curves"] = ["a"]
    f = tmp_path / "m.json"
    f.write_text(json.dumps(data), encoding="utf-8")
    code, _, err = run(capsys, "check", "--file", str(f))
    assert code == 2 and "$.points[1].curves" in err


@pytest.mark.parametrize("argv,expected", [
    (("--catalog", "simplicial", "--code", "A1(7)"), "7/24"),
    (("--catalog", "fermat", "--n", "3"), "1/4"),
    (("--catalog", "hesse_conics"), "1/4"),
])
def test_epsilon_config(capsys, argv, expected):
    code, out, _ = run(capsys, "epsilon-config", *argv)
    assert code == 0 and out.strip() == expected


def test_table(capsys):
    code, out, _ = run(capsys, "--json", "table")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 11
    a12 = next(r for r in rows if r["name"] == "A1(12)")
    assert a12["t"] == "(6,15,0,0,1)" and a12["epsilon_config"] == "4/21"
    a6 = next(r for r in rows if r["name"] == "A1(6)")
    assert a6["epsilon_config"] == "1/3" and a6["epsilon_status"] == "certified"
    assert all(r["epsilon_status"] == "paper-reported, not verified here" for r in rows if r["name"] != "A1(6)")
    code, out, _ = run(capsys, "table")
    assert "paper-reported, not verified here" in out


def test_certify_targets(capsys):
    assert run(capsys, "certify", "--catalog", "hesse_conics", "--target", "1/5")[0] == 0
    assert run(capsys, "certify", "--catalog", "star", "--d", "1", "--k", "4", "--target", "1/3")[0] == 0
    assert run(capsys, "certify", "--catalog", "star", "--d", "1", "--k", "4", "--target", "1/4")[0] == 1


def test_certify_verify_and_tamper(tmp_path, capsys):
    cert = tmp_path / "c.json"
    assert run(capsys, "certify", "--catalog", "hesse_conics", "--out", str(cert))[0] == 0
    assert run(capsys, "certify", "--verify", str(cert))[0] == 0
    data = json.loads(cert.read_text())
    term = data["lower"]["factors"][0]["curve"]["terms"][-1]
    term["coeff"] = ["3"] + term["coeff"][1:]
    cert.write_text(json.dumps(data))
    assert run(capsys, "certify", "--verify", str(cert))[0] == 1


def test_interpolate_hesse_quintic(capsys):
    code, out, _ = run(capsys, "--json", "interpolate", "--catalog", "hesse_conics", "--degree", "5")
    data = json.loads(out)
    assert code == 0 and data["dimension"] >= 1 and all(b["degree"] == 5 for b in data["basis"])
    code, out, _ = run(capsys, "interpolate", "--catalog", "hesse_conics", "--degree", "5")
    assert "vector space" in out


def test_interpolate_mults(capsys):
    code, out, _ = run(capsys, "--json", "interpolate", "--catalog", "star", "--d", "1", "--k", "3",
                       "--degree", "3", "--mults", "arrangement")
    assert code == 0 and json.loads(out)["dimension"] == 1
    assert run(capsys, "interpolate", "--catalog", "pc65", "--degree", "2", "--mults", "1,2")[0] == 2


def test_bounds_hesse(capsys):
    code, out, _ = run(capsys, "bounds", "--catalog", "hesse_conics")
    assert code == 0 and "2/93" in out and "1/4 ≥ 2/93" in out


def test_search(capsys):
    code, out, _ = run(capsys, "--json", "search", "--catalog", "pc65")
    data = json.loads(out)
    assert code == 0 and data["mpl"] == 2 and data["best_conic"]["ratio"] == "2/5"


def test_catalog_show_round_trip(tmp_path, capsys):
    f = tmp_path / "f.json"
    assert run(capsys, "catalog", "show", "dual_hesse", "--out", str(f))[0] == 0
    assert run(capsys, "check", "--file", str(f))[0] == 0


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "hesse_conics" in out


def test_json_output_is_stable(capsys):
    a = run(capsys, "--json", "certify", "--catalog", "quasi_pencil", "--k", "5")[1]
    b = run(capsys, "certify", "--catalog", "quasi_pencil", "--k", "5", "--json")[1]
    assert a == b and json.loads(a)["exact"] == "1/4"


@pytest.mark.parametrize("argv", [
    ("check",),
    ("check", "--catalog", "fermat"),
    ("check", "--catalog", "nope"),
    ("check", "--catalog", "pc65", "--file", "x.json"),
    ("bogus",),
    (),
    ("certify", "--catalog", "simplicial", "--code", "A1(7)"),
    ("certify", "--catalog", "pc65", "--target", "one-half"),
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "seshadri_config", "epsilon-config", "--catalog", "pc65"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2/5"
