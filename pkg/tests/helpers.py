"""Shared hypothesis strategies and small oracles for the test suite."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from seshadri_config.field import NumberFieldSpec, QQ, make_field_context
from seshadri_config.geometry import HomogeneousPolynomial, ProjectivePoint

SEXTIC = [31, 36, 27, -4, 9, 0, 1]
SEXTIC_CTX = make_field_context(NumberFieldSpec(SEXTIC))
QUADRATIC_CTX = make_field_context(NumberFieldSpec([1, 1, 1]))  # u^2 + u + 1

small_fraction = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))


def elements(ctx):
    return st.lists(small_fraction, min_size=ctx.degree, max_size=ctx.degree).map(ctx.from_coords)


def nonzero_elements(ctx):
    return elements(ctx).filter(bool)


small_int = st.integers(-4, 4)
rational_points = st.tuples(small_int, small_int, small_int).filter(any).map(ProjectivePoint)
rational_lines = st.tuples(small_int, small_int, small_int).filter(any).map(
    lambda t: HomogeneousPolynomial.linear(*t))


def sympy_reduce(coords_a, coords_b, minpoly):
    """Oracle product in Q[u]/(minpoly) via sympy polynomial remainder."""
    u = sympy.Symbol("u")
    pa = sum(sympy.Rational(c.numerator, c.denominator) * u ** i for i, c in enumerate(coords_a))
    pb = sum(sympy.Rational(c.numerator, c.denominator) * u ** i for i, c in enumerate(coords_b))
    f = sum(c * u ** i for i, c in enumerate(minpoly))
    r = sympy.Poly(sympy.rem(sympy.expand(pa * pb), f, u), u)
    out = [Fraction(0)] * (len(minpoly) - 1)
    for (k,), c in r.terms():
        out[k] = Fraction(int(c.p), int(c.q))
    return out


def sympy_rank(matrix) -> int:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in matrix]).rank()


__all__ = ["SEXTIC", "SEXTIC_CTX", "QUADRATIC_CTX", "QQ", "elements", "nonzero_elements", "rational_points",
           "rational_lines", "sympy_reduce", "sympy_rank", "small_fraction"]
