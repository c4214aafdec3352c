"""Built-in arrangements.

===============  ===========================================================
name             parameters / content
===============  ===========================================================
fermat           n >= 2: the 3n lines (x^n - y^n)(y^n - z^n)(z^n - x^n)
                 over the n-th cyclotomic field
dual_hesse       the 9 lines of fermat(3); t3 = 12
hesse_conics     12 conics through the 21 tabulated points (degree-6 field)
star             d in {1, 2}, k >= 3: curves meeting only in double points
quasi_pencil     k >= 4: a (k-1)-fold pencil plus one line
hl               k >= 5: a (k-2)-fold pencil plus two lines
pc65             the six conics through 5 of 6 points in general position
simplicial       code such as "A1(10)": t-vector only (A1(6) also geometric)
===============  ===========================================================

The conic arrangement of Hesse type also forms, with the nine dual Hesse
lines, a 21-curve conic-line arrangement (t9 = 9, t5 = 12, t2 = 72); it is
not shipped.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .arrangement import (ArrangementError, CombinatorialArrangement, GeometricArrangement, curve_arrangement,
                          line_arrangement, tvector_from_list)
from .field import QQ, FieldContext, make_field_context
from .geometry import HomogeneousPolynomial, ProjectivePoint, conic_rank, line_through, evaluate
from .hesse_data import EIGHTFOLD, hesse_context, hesse_points
from .linsys import MultiplicityAssignment, interpolate


class UnknownEntryError(ArrangementError):
    pass


class ParamsOutOfRangeError(ArrangementError):
    pass


class GenericityError(ArrangementError):
    pass


L = HomogeneousPolynomial.linear


# name, t-vector (t2, t3, ...), printed epsilon of the Seshadri constant
SIMPLICIAL_TABLE: list[tuple[str, tuple[int, ...], Fraction]] = [
    ("A1(6)", (3, 4), Fraction(1, 3)),
    ("A1(7)", (3, 6), Fraction(1, 4)),
    ("A1(8)", (4, 6, 1), Fraction(1, 4)),
    ("A1(9)", (6, 4, 3), Fraction(1, 4)),
    ("A1(10)", (5, 10, 0, 1), Fraction(1, 5)),
    ("A2(10)", (6, 7, 3), Fraction(1, 6)),
    ("A3(10)", (6, 7, 3), Fraction(1, 5)),
    ("A1(11)", (7, 8, 4), Fraction(1, 6)),
    ("A1(12)", (6, 15, 0, 0, 1), Fraction(1, 6)),
    ("A2(12)", (8, 10, 3, 1), Fraction(1, 6)),
    ("A3(12)", (9, 7, 6), Fraction(1, 6)),
]

# lines whose images under (x:y:z) -> (x^2:y^2:z^2) form a 2-star for k <= 5
STAR2_LINES = [(1, 3, 2), (1, 2, 3), (1, 8, 4), (1, 7, 5), (1, 5, 8)]

PC65_POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (2, 3, 1)]


def cyclotomic_context(n: int) -> FieldContext:
    from sympy import Poly, cyclotomic_poly, symbols

    u = symbols("u")
    coeffs = Poly(cyclotomic_poly(n, u), u).all_coeffs()[::-1]
    return make_field_context([int(c) for c in coeffs])


def fermat(n: int) -> GeometricArrangement:
    if n < 2:
        raise ParamsOutOfRangeError("fermat needs n >= 2")
    K = cyclotomic_context(n)
    zeta = K.gen()
    one, zero = K.one(), K.zero()
    lines = []
    for pos in range(3):
        for j in range(n):
            c = [zero, zero, zero]
            c[pos] = one
            c[(pos + 1) % 3] = -(zeta ** j)
            lines.append(L(*c, ctx=K))
    return line_arrangement(lines, name=f"fermat({n})", ctx=K)


def dual_hesse() -> GeometricArrangement:
    G = fermat(3)
    G.name = "dual_hesse"
    return G


def star(d: int, k: int) -> GeometricArrangement:
    if k < 2:
        raise ParamsOutOfRangeError("star needs k >= 2")
    if d == 1:
        # rows of a Vandermonde matrix: no three lines concurrent
        lines = [L(1, i, i * i) for i in range(1, k + 1)]
        G = line_arrangement(lines, name=f"star(1,{k})")
    elif d == 2:
        if k > len(STAR2_LINES):
            raise ParamsOutOfRangeError(f"star(2, k) is tabulated for k <= {len(STAR2_LINES)}")
        G = _star2(k)
    else:
        raise ParamsOutOfRangeError("star is available for d in {1, 2}")
    expected = {2: d * d * k * (k - 1) // 2}
    if G.t != expected:
        raise GenericityError(f"star({d},{k}) has t = {G.t}, expected {expected}")
    return G


def _star2(k: int) -> GeometricArrangement:
    def image_conic(a, b, c):
        a2, b2, c2 = a * a, b * b, c * c
        return HomogeneousPolynomial(2, {(2, 0, 0): a2 * a2, (0, 2, 0): b2 * b2, (0, 0, 2): c2 * c2,
                                         (1, 1, 0): -2 * a2 * b2, (1, 0, 1): -2 * a2 * c2,
                                         (0, 1, 1): -2 * b2 * c2})

    chosen = STAR2_LINES[:k]
    conics = [image_conic(*v) for v in chosen]
    pts = []
    for (i, u), (j, v) in itertools.combinations(enumerate(chosen), 2):
        for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            w = (v[0], s1 * v[1], s2 * v[2])
            p = (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])
            pts.append(ProjectivePoint([c * c for c in p]))
    if len(set(pts)) != len(pts):
        raise GenericityError("2-star intersection points are not distinct")
    for C in conics:
        if conic_rank(C) != 3:
            raise GenericityError("2-star conic is singular")
    return curve_arrangement(conics, pts, name=f"star(2,{k})")


def quasi_pencil(k: int) -> GeometricArrangement:
    if k < 4:
        raise ParamsOutOfRangeError("quasi_pencil needs k >= 4")
    lines = [L(1, j, 0) for j in range(k - 1)] + [L(0, 0, 1)]
    return line_arrangement(lines, name=f"quasi_pencil({k})")


def hl(k: int) -> GeometricArrangement:
    """(k-2)-fold pencil through (0:0:1) plus z and x - y + z."""
    if k < 5:
        raise ParamsOutOfRangeError("hl needs k >= 5")
    lines = [L(1, j, 0) for j in range(k - 2)] + [L(0, 0, 1), L(1, -1, 1)]
    G = line_arrangement(lines, name=f"hl({k})")
    expected = {2: 2 * k - 3, k - 2: 1}
    if G.t != expected:
        raise GenericityError(f"hl({k}) has t = {G.t}, expected {expected}")
    return G


def pc65() -> GeometricArrangement:
    pts = [ProjectivePoint(p) for p in PC65_POINTS]
    for a, b, c in itertools.combinations(pts, 3):
        if not evaluate(line_through(a, b), c):
            raise GenericityError("three of the six points are collinear")
    if interpolate(2, MultiplicityAssignment.uniform(pts)).dimension:
        raise GenericityError("the six points lie on a conic")
    conics = []
    for omit in range(6):
        res = interpolate(2, MultiplicityAssignment.uniform([p for i, p in enumerate(pts) if i != omit]))
        if res.dimension != 1 or conic_rank(res.basis[0]) != 3:
            raise GenericityError(f"no unique smooth conic through the points other than {omit}")
        conics.append(res.basis[0])
    G = curve_arrangement(conics, pts, name="pc65")
    if G.t != {5: 6}:
        raise GenericityError(f"pc65 has t = {G.t}")
    return G


def hesse_conic_search(points=None) -> list[tuple[tuple[int, ...], HomogeneousPolynomial]]:
    """Smooth conics through 6-subsets of the nine 8-fold points."""
    points = points or hesse_points()
    eight = [points[i] for i in EIGHTFOLD]
    found = []
    for S in itertools.combinations(range(9), 6):
        res = interpolate(2, MultiplicityAssignment.uniform([eight[i] for i in S]))
        if res.dimension == 1 and conic_rank(res.basis[0]) == 3:
            found.append((S, res.basis[0]))
    return found


@lru_cache(maxsize=1)
def _hesse_conics_cached():
    K = hesse_context()
    pts = hesse_points(K)
    conics = [c for _, c in hesse_conic_search(pts)]
    if len(conics) != 12:
        raise GenericityError(f"expected 12 conics, found {len(conics)}")
    return K, pts, conics


def hesse_conics() -> GeometricArrangement:
    K, pts, conics = _hesse_conics_cached()
    return curve_arrangement(conics, pts, name="hesse_conics", ctx=K)


def simplicial(code: str, geometric: bool = False):
    for name, t, _ in SIMPLICIAL_TABLE:
        if name.lower() == code.replace(" ", "").lower():
            n = int(name[name.index("(") + 1:-1])
            if geometric:
                if name != "A1(6)":
                    raise ParamsOutOfRangeError("only A1(6) ships with coordinates")
                lines = [L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, -1, 0), L(0, 1, -1), L(1, 0, -1)]
                return line_arrangement(lines, name="A1(6)")
            return CombinatorialArrangement(k=n, d=1, t=tvector_from_list(t), name=name)
    raise ParamsOutOfRangeError(f"unknown simplicial arrangement {code!r}")


_BUILDERS = {
    "fermat": fermat,
    "dual_hesse": dual_hesse,
    "hesse_conics": hesse_conics,
    "star": star,
    "quasi_pencil": quasi_pencil,
    "hl": hl,
    "pc65": pc65,
    "simplicial": simplicial,
}

PARAMS = {
    "fermat": ("n",),
    "dual_hesse": (),
    "hesse_conics": (),
    "star": ("d", "k"),
    "quasi_pencil": ("k",),
    "hl": ("k",),
    "pc65": (),
    "simplicial": ("code",),
}


def names() -> list[str]:
    return list(_BUILDERS)


def catalog(name: str, *args, **params):
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog entry {name!r}; known: {', '.join(_BUILDERS)}") from None
    try:
        return builder(*args, **params)
    except TypeError as exc:
        raise ParamsOutOfRangeError(f"{name}: {exc}") from None
