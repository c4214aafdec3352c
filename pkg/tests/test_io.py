import json

import pytest

from seshadri_config import catalog as cat
from seshadri_config.arrangement import (GeometricArrangement, epsilon_config, per_curve_check,
                                         validate_combinatorics, verify_geometry)
from seshadri_config.io import ArrangementFileError, arrangement_from_json, arrangement_to_json, load_arrangement, \
    save_arrangement
from seshadri_config.seshadri import compute_seshadri

ENTRIES = [("fermat", {"n": 3}), ("dual_hesse", {}), ("hesse_conics", {}), ("star", {"d": 2, "k": 3}),
           ("quasi_pencil", {"k": 5}), ("hl", {"k": 6}), ("pc65", {}), ("simplicial", {"code": "A2(12)"})]


@pytest.mark.parametrize("name,params", ENTRIES, ids=[n for n, _ in ENTRIES])
def test_round_trip(tmp_path, name, params):
    A = cat.catalog(name, **params)
    path = tmp_path / "a.json"
    save_arrangement(A, path)
    B = load_arrangement(path)
    assert (B.k, B.d, B.t, B.name) == (A.k, A.d, A.t, A.name)
    assert epsilon_config(B) == epsilon_config(A)
    assert validate_combinatorics(B).passed
    if isinstance(A, GeometricArrangement):
        assert B.curves == A.curves and B.singular_points == A.singular_points and B.ctx == A.ctx
        assert per_curve_check(B).passed and verify_geometry(B).passed
    assert arrangement_to_json(B) == arrangement_to_json(A)


def test_round_trip_preserves_certificate(tmp_path):
    A = cat.pc65()
    save_arrangement(A, tmp_path / "p.json")
    B = load_arrangement(tmp_path / "p.json")
    assert compute_seshadri(A).to_json() == compute_seshadri(B).to_json()


def test_rationals_are_strings():
    data = arrangement_to_json(cat.pc65())
    coeffs = [c for curve in data["curves"] for term in curve["terms"] for c in term["coeff"]]
    assert coeffs and all(isinstance(c, str) for c in coeffs)


def _base():
    return arrangement_to_json(cat.star(1, 3))


@pytest.mark.parametrize("mutate,path", [
    (lambda d: d.pop("k"), "$.k"),
    (lambda d: d.update(d=0), "$.d"),
    (lambda d: d["combinatorics"]["t"].update({"2": "x"}), "$.combinatorics.t.2"),
    (lambda d: d["curves"][1]["terms"][0].update(coeff=["1/0"]), "$.curves[1]"),
    (lambda d: d["points"][2].update(curves=[0, 9]), "$.points[2].curves"),
    (lambda d: d["points"][0].pop("coords"), "$.points[0]"),
    (lambda d: d.update(field={"type": "number_field", "minpoly": ["1", "2"]}), "$.field"),
    (lambda d: d["curves"].pop(), "$.curves"),
])
def test_malformed_names_json_path(mutate, path):
    data = _base()
    mutate(data)
    with pytest.raises(ArrangementFileError) as info:
        arrangement_from_json(data)
    assert info.value.path == path


def test_unreadable_and_invalid_files(tmp_path):
    with pytest.raises(ArrangementFileError):
        load_arrangement(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ArrangementFileError) as info:
        load_arrangement(bad)
    assert info.value.path == "$"
    bad.write_text(json.dumps([1, 2]), encoding="utf-8")
    with pytest.raises(ArrangementFileError):
        load_arrangement(bad)
