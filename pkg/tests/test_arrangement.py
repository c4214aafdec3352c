import dataclasses
import warnings
from fractions import Fraction

import pytest

from seshadri_config import catalog as cat
from seshadri_config.arrangement import (ArrangementError, CombinatorialArrangement, IncidencePoint,
                                         MissingGeometryError, OutOfRangeError, UndefinedError, base_constant,
                                         epsilon_config, f_numbers, hirzebruch_check, line_arrangement,
                                         per_curve_check, prsz_check, theorem_hypotheses, theorem_lower_bound,
                                         tvector_from_list, validate_combinatorics, verify_geometry)
from seshadri_config.geometry import HomogeneousPolynomial, ProjectivePoint

L = HomogeneousPolynomial.linear

GEOMETRIC = [("fermat", {"n": 2}), ("fermat", {"n": 3}), ("fermat", {"n": 4}), ("dual_hesse", {}),
             ("hesse_conics", {}), ("star", {"d": 1, "k": 3}), ("star", {"d": 1, "k": 5}),
             ("star", {"d": 2, "k": 3}), ("star", {"d": 2, "k": 5}), ("quasi_pencil", {"k": 5}),
             ("quasi_pencil", {"k": 6}), ("hl", {"k": 6}), ("pc65", {}), ("simplicial", {"code": "A1(6)"})]


def build(name, params):
    if name == "simplicial":
        return cat.simplicial(params["code"], geometric=True)
    return cat.catalog(name, **params)


def comb(k, d, t):
    return CombinatorialArrangement(k=k, d=d, t=t)


def test_count_identity_hesse():
    r = validate_combinatorics(comb(12, 2, {2: 12, 8: 9}))
    assert r.passed and r.messages == ["264 = 264"]


def test_count_identity_fermat2():
    r = validate_combinatorics(comb(6, 1, {3: 4, 2: 3}))
    assert r.passed and r.detail == {"lhs": 15, "rhs": 15}


def test_count_identity_broken():
    r = validate_combinatorics(comb(6, 1, {2: 14}))
    assert not r.passed and r.messages == ["15 ≠ 14"]


def test_f_numbers():
    assert f_numbers(cat.simplicial("A1(10)")) == (16, 45)
    assert f_numbers(comb(12, 2, {2: 12, 8: 9})) == (21, 96)
    assert f_numbers(comb(3, 1, {})) == (0, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_epsilon_config_fermat_formula(n):
    A = comb(3 * n, 1, {3: n * n, n: 3}) if n != 3 else comb(9, 1, {3: 12})
    assert epsilon_config(A) == Fraction(1, n + 1)


def test_epsilon_config_values():
    assert epsilon_config(cat.simplicial("A1(7)")) == Fraction(7, 24)
    assert epsilon_config(comb(12, 2, {2: 12, 8: 9})) == Fraction(1, 4)
    with pytest.raises(UndefinedError):
        epsilon_config(comb(3, 1, {}))


def test_hirzebruch_examples():
    r = hirzebruch_check(cat.simplicial("A1(6)"))
    assert r.passed and r.detail == {"lhs": 7, "rhs": 6}
    r = hirzebruch_check(cat.simplicial("A1(12)"))
    assert r.passed and r.detail == {"lhs": 21, "rhs": 14}
    assert hirzebruch_check(cat.quasi_pencil(6).base).status == "not-applicable"


def test_prsz_examples():
    r = prsz_check(comb(12, 2, {2: 12, 8: 9}))
    assert r.passed and r.detail == {"lhs": 72, "rhs": 36}
    r = prsz_check(comb(3, 2, {2: 12}))
    # (7*2/2 - 9/2) * 2 * 3 + 12
    assert r.passed and r.detail["lhs"] == Fraction(5, 2) * 6 + 12 == 27 and r.detail["rhs"] == 0
    assert prsz_check(cat.simplicial("A1(6)")).status == "not-applicable"


def test_theorem_bound_values():
    assert theorem_lower_bound(comb(12, 2, {2: 12, 8: 9})) == Fraction(2, 93)
    # 2 / (4*1*12 + 3*1 - 9)
    assert theorem_lower_bound(cat.simplicial("A1(12)")) == Fraction(2, 42) == Fraction(1, 21)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        two = comb(2, 1, {2: 1})
    with pytest.raises(OutOfRangeError):
        theorem_lower_bound(two)


def test_k2_warns():
    with pytest.warns(UserWarning):
        comb(2, 2, {2: 4})


def test_theorem_hypotheses_for_lines():
    assert theorem_hypotheses(cat.simplicial("A1(6)"))[0]
    assert not theorem_hypotheses(cat.quasi_pencil(6).base)[0]
    assert not theorem_hypotheses(cat.star(1, 4).base)[0]


def test_per_curve_hesse_and_fermat():
    r = per_curve_check(cat.hesse_conics())
    assert r.passed and set(r.detail["sums"]) == {44}
    r = per_curve_check(cat.fermat(2))
    assert r.passed and set(r.detail["sums"]) == {5}


def test_per_curve_detects_missing_incidence():
    G = cat.fermat(2)
    ip = G.points[0]
    broken = dataclasses.replace(G, points=[IncidencePoint(ip.point, ip.incident[1:])] + G.points[1:])
    assert not per_curve_check(broken).passed


def test_missing_geometry():
    with pytest.raises(MissingGeometryError):
        per_curve_check(cat.simplicial("A1(7)"))


def test_base_constants():
    assert base_constant(cat.hesse_conics()) == 8
    assert base_constant(cat.star(1, 4)) == 3
    assert base_constant(cat.quasi_pencil(5)) == 4


def test_verify_geometry_hesse():
    r = verify_geometry(cat.hesse_conics())
    assert r.passed and r.detail["t_recomputed"] == {2: 12, 8: 9}


def test_verify_geometry_point_off_curve():
    G = cat.star(1, 4)
    ip = G.points[0]
    missing = next(i for i in range(G.k) if i not in ip.incident)
    liar = IncidencePoint(ip.point, tuple(sorted(ip.incident + (missing,))))
    r = verify_geometry(dataclasses.replace(G, points=[liar] + G.points[1:]))
    assert not r.passed and not r.detail["checks"]["incidence"]


def test_verify_geometry_pencil_fails_common_point_check():
    pencil = line_arrangement([L(1, 0, 0), L(0, 1, 0), L(1, 1, 0), L(1, -1, 0)], allow_tk=False)
    r = verify_geometry(pencil)
    assert not r.passed and not r.detail["checks"]["no_common_point"]


def test_verify_geometry_tangency_detected():
    conic = HomogeneousPolynomial(2, {(2, 0, 0): 1, (0, 1, 1): -1})
    tangent = L(0, 0, 1)  # tangent to x^2 = yz at (0:1:0)
    from seshadri_config.arrangement import curve_arrangement
    G = curve_arrangement([conic, tangent, L(0, 1, 0)], [ProjectivePoint((0, 1, 0)), ProjectivePoint((0, 0, 1)),
                                                         ProjectivePoint((1, 0, 0))])
    r = verify_geometry(G)
    assert not r.detail["checks"]["ordinary"]


def test_fermat2_structure():
    G = cat.fermat(2)
    assert G.k == 6 and G.ctx.degree == 1 and G.t == {3: 4, 2: 3}


def test_simplicial_a1_10():
    assert cat.simplicial("A1(10)").t == tvector_from_list((5, 10, 0, 1))


def test_hesse_catalog_census():
    G = cat.hesse_conics()
    assert len(G.points) == 21 and G.k == 12 and G.ctx.degree == 6
    mults = sorted(ip.multiplicity for ip in G.points)
    assert mults == [2] * 12 + [8] * 9
    assert len(cat.hesse_conic_search()) == 12


def test_catalog_errors():
    with pytest.raises(cat.UnknownEntryError):
        cat.catalog("nope")
    with pytest.raises(ArrangementError):
        cat.catalog("fermat", n=1)
    with pytest.raises(ArrangementError):
        cat.catalog("star", d=3, k=3)
    with pytest.raises(ArrangementError):
        cat.simplicial("A4(13)")


@pytest.mark.parametrize("name,params", GEOMETRIC, ids=[f"{n}{sorted(p.values())}" for n, p in GEOMETRIC])
def test_catalog_entry_passes_all_checks(name, params):
    G = build(name, params)
    assert validate_combinatorics(G).passed
    assert per_curve_check(G).passed
    assert verify_geometry(G).passed


@pytest.mark.parametrize("d,k", [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
def test_star_has_only_double_points(d, k):
    assert cat.star(d, k).t == {2: d * d * k * (k - 1) // 2}


def test_hl_and_quasi_pencil_counts():
    assert cat.quasi_pencil(5).t == {4: 1, 2: 4}
    assert cat.hl(6).t == {4: 1, 2: 9}


@pytest.mark.parametrize("name,params", GEOMETRIC, ids=[f"{n}{sorted(p.values())}" for n, p in GEOMETRIC])
def test_epsilon_config_above_theorem_bound(name, params):
    G = build(name, params)
    assert epsilon_config(G) == Fraction(G.d * G.k, G.f1)
    if theorem_hypotheses(G)[0]:
        assert epsilon_config(G) >= theorem_lower_bound(G)
