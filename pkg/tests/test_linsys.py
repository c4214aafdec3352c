import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rational_points, sympy_rank
from seshadri_config import catalog as cat
from seshadri_config.arrangement import MissingGeometryError
from seshadri_config.geometry import ProjectivePoint, line_through, monomials, multiplicity_at
from seshadri_config.linsys import (MultiplicityAssignment, conditions_matrix, conditions_matrix_mod_p, interpolate,
                                    kernel_basis, matrix_rank, modular_dimension, rank_mod_p, unique_member_check)

P = ProjectivePoint


def as_fractions(matrix):
    return [[x.to_fraction() for x in row] for row in matrix]


def test_conditions_shapes():
    M = MultiplicityAssignment.uniform([P((1, 0, 0)), P((0, 1, 1))])
    assert np.shape(conditions_matrix(1, M)) == (2, 3)
    M = MultiplicityAssignment(((P((1, 2, 3)), 2),))
    assert np.shape(conditions_matrix(2, M)) == (3, 6)
    hesse = cat.hesse_conics()
    M = MultiplicityAssignment.uniform(hesse.singular_points)
    assert np.shape(conditions_matrix(5, M)) == (21, 21)


def test_degree_one_rows_are_coordinates():
    M = MultiplicityAssignment.uniform([P((1, 2, 3)), P((4, 5, 1))])
    assert as_fractions(conditions_matrix(1, M)) == [[Fraction(1, 3), Fraction(2, 3), 1], [4, 5, 1]]


def test_assignment_validation():
    with pytest.raises(ValueError):
        MultiplicityAssignment(((P((1, 0, 0)), 1), (P((2, 0, 0)), 1)))
    with pytest.raises(ValueError):
        MultiplicityAssignment(((P((1, 0, 0)), 0),))


def test_kernel_small_cases():
    one, zero = Fraction(1), Fraction(0)
    assert kernel_basis([[one, zero, zero], [zero, one, zero], [zero, zero, one]]) == []
    assert kernel_basis([[1, 2, 3], [4, 5, 6]]) == [[1, -2, 1]]


def test_joining_line():
    p, q = P((1, 2, 3)), P((-1, 0, 5))
    res = interpolate(1, MultiplicityAssignment.uniform([p, q]))
    assert res.dimension == 1 and res.basis[0] == line_through(p, q)


def test_fermat2_cubic_dimension_matches_brute_force_rank():
    pts = cat.fermat(2).singular_points
    M = MultiplicityAssignment.uniform(pts)
    res = interpolate(3, M)
    oracle = sympy_rank(as_fractions(conditions_matrix(3, M)))
    assert res.rank == oracle and res.dimension == 10 - oracle == 3


def test_hesse_quintic_has_nonzero_kernel():
    G = cat.hesse_conics()
    res = interpolate(5, MultiplicityAssignment.uniform(G.singular_points))
    assert res.ambient == 21 and res.conditions == 21
    assert res.dimension == 3  # computed golden value
    for b in res.basis:
        assert all(multiplicity_at(b, p) >= 1 for p in G.singular_points)


def test_double_point_conditions_force_singularity():
    p = P((1, 1, 1))
    res = interpolate(2, MultiplicityAssignment(((p, 2),)))
    assert res.dimension == 3
    assert all(multiplicity_at(b, p) >= 2 for b in res.basis)


def test_result_json_shape():
    res = interpolate(2, MultiplicityAssignment.uniform([P((1, 0, 0))]))
    assert set(res.to_json()) == {"degree", "ambient", "conditions", "rank", "dimension", "basis"}


def _random_assignment(rng, n, mmax):
    pts = set()
    while len(pts) < n:
        pts.add(P((rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(1, 5))))
    return MultiplicityAssignment(tuple((p, rng.randint(1, mmax)) for p in sorted(pts, key=P.sort_key)))


@pytest.mark.parametrize("seed", range(4))
def test_rank_invariant_under_row_shuffles(seed):
    rng = random.Random(seed)
    M = _random_assignment(rng, 5, 2)
    mat = conditions_matrix(4, M)
    rank = matrix_rank(mat)
    for _ in range(6):
        rows = list(mat)
        rng.shuffle(rows)
        assert matrix_rank(rows) == rank


def test_rank_invariant_under_shuffles_over_number_field():
    mat = conditions_matrix(5, MultiplicityAssignment.uniform(cat.hesse_conics().singular_points))
    rng = random.Random(7)
    rank = matrix_rank(mat)
    for _ in range(20):
        rows = list(mat)
        rng.shuffle(rows)
        assert matrix_rank(rows) == rank == 18


@pytest.mark.parametrize("seed", range(6))
def test_dimension_monotone_in_degree(seed):
    rng = random.Random(100 + seed)
    M = _random_assignment(rng, rng.randint(3, 7), 3)
    dims = [interpolate(e, M).dimension for e in range(1, 7)]
    assert dims == sorted(dims)


@settings(max_examples=60, deadline=None)
@given(st.lists(rational_points, min_size=1, max_size=8, unique=True), st.integers(1, 4),
       st.lists(st.integers(1, 3), min_size=8, max_size=8))
def test_dimension_bounds_and_reverification(points, e, mults):
    M = MultiplicityAssignment(tuple(zip(points, mults)))
    res = interpolate(e, M)  # re-verifies every basis form
    assert res.ambient - res.conditions <= res.dimension <= res.ambient
    assert res.dimension == res.ambient - sympy_rank(as_fractions(conditions_matrix(e, M)))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_kernel_matches_sympy(rows):
    basis = kernel_basis(rows)
    A = sympy.Matrix(rows)
    assert len(basis) == len(rows[0]) - A.rank()
    for v in basis:
        assert next(x for x in v if x) == 1
        assert A * sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in v]) == sympy.zeros(len(rows), 1)


def test_modular_rank_bounds_exact_rank():
    rng = random.Random(3)
    for _ in range(10):
        M = _random_assignment(rng, 6, 2)
        exact = interpolate(4, M).dimension
        upper, primes = modular_dimension(4, M)
        assert upper >= exact and len(primes) == 2


def test_rank_mod_p_against_sympy():
    rng = random.Random(5)
    p = 1000003
    for _ in range(20):
        a = [[rng.randint(0, 4) for _ in range(6)] for _ in range(5)]
        a[4] = [(x + 2 * y) % p for x, y in zip(a[0], a[1])]
        assert rank_mod_p(np.array(a), p) == sympy.Matrix(a).rank()


def test_modular_matrix_is_reduction_of_exact():
    G = cat.fermat(3)
    M = MultiplicityAssignment.uniform(G.singular_points[:5])
    p, root = G.ctx.find_split_prime()
    exact = conditions_matrix(2, M)
    red = conditions_matrix_mod_p(2, M, p, root)
    assert red.tolist() == [[x.mod_p(p, root) for x in row] for row in exact]


def test_unique_member_fermat2():
    r = unique_member_check(cat.fermat(2))
    assert r["degree"] == 6 and r["method"] == "exact"
    assert r["dimension"] == 1 and r["unique"]


def test_unique_member_star_1_3():
    r = unique_member_check(cat.star(1, 3))
    assert r["degree"] == 3 and r["conditions"] == 9 and r["dimension"] == 1 and r["unique"]


def test_unique_member_hesse():
    r = unique_member_check(cat.hesse_conics())
    assert r["degree"] == 24 and r["ambient"] == 325
    assert r["dimension_lower"] == r["dimension_upper"] == r["dimension"] == 1 and r["unique"]


def test_unique_member_needs_geometry():
    with pytest.raises(MissingGeometryError):
        unique_member_check(cat.simplicial("A1(7)"))


def test_monomial_count():
    assert all(len(monomials(e)) == (e + 1) * (e + 2) // 2 for e in range(8))
