"""Homogeneous forms in x, y, z and points of the projective plane."""

from __future__ import annotations

from fractions import Fraction

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .field import FieldContext, FieldElement, QQ, ContextMismatchError, element_from_json, element_to_json

Exp = tuple[int, int, int]


class GeometryError(ValueError):
    pass


class DegenerateInputError(GeometryError):
    pass


class UndefinedMultiplicityError(GeometryError):
    pass


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[Exp, ...]:
    """Exponent triples of degree d in graded-lex order (x > y > z)."""
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


class HomogeneousPolynomial:
    """A form of fixed degree; ``terms`` maps exponent triples to nonzero coefficients."""

    __slots__ = ("degree", "terms", "ctx")

    def __init__(self, degree: int, terms: Mapping[Exp, object], ctx: FieldContext = QQ):
        if degree < 0:
            raise GeometryError("degree must be non-negative")
        clean: dict[Exp, FieldElement] = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != 3 or sum(exp) != degree or min(exp) < 0:
                raise GeometryError(f"exponent {exp} does not have degree {degree}")
            c = ctx(c)
            if c:
                clean[exp] = c
        self.degree = degree
        self.terms = clean
        self.ctx = ctx

    # -- construction helpers -----------------------------------------------
    @classmethod
    def linear(cls, a, b, c, ctx: FieldContext = QQ) -> "HomogeneousPolynomial":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, ctx)

    @classmethod
    def from_coefficients(cls, degree: int, coeffs: Sequence, ctx: FieldContext = QQ):
        """Coefficients listed in :func:`monomials` order."""
        mons = monomials(degree)
        if len(coeffs) != len(mons):
            raise GeometryError(f"expected {len(mons)} coefficients, got {len(coeffs)}")
        return cls(degree, dict(zip(mons, coeffs)), ctx)

    def coefficient(self, exp: Exp) -> FieldElement:
        return self.terms.get(tuple(exp), self.ctx.zero())

    def coefficients(self) -> list[FieldElement]:
        return [self.coefficient(m) for m in monomials(self.degree)]

    def is_zero(self) -> bool:
        return not self.terms

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "HomogeneousPolynomial"):
        if self.ctx != other.ctx:
            raise ContextMismatchError("polynomials over different fields")

    def __add__(self, other: "HomogeneousPolynomial"):
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        if other.degree != self.degree:
            raise GeometryError("cannot add forms of different degrees")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return HomogeneousPolynomial(self.degree, terms, self.ctx)

    def __neg__(self):
        return HomogeneousPolynomial(self.degree, {e: -c for e, c in self.terms.items()}, self.ctx)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return self.scale(other)
        self._check(other)
        terms: dict[Exp, FieldElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                v = c1 * c2
                terms[e] = terms[e] + v if e in terms else v
        return HomogeneousPolynomial(self.degree + other.degree, terms, self.ctx)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "HomogeneousPolynomial":
        c = self.ctx(c)
        return HomogeneousPolynomial(self.degree, {e: v * c for e, v in self.terms.items()}, self.ctx)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def normalized(self) -> "HomogeneousPolynomial":
        """Scale so the first nonzero coefficient in graded-lex order is 1."""
        for m in monomials(self.degree):
            if m in self.terms:
                return self.scale(self.terms[m].inverse())
        return self

    def is_proportional(self, other: "HomogeneousPolynomial") -> bool:
        return self.degree == other.degree and self.normalized() == other.normalized()

    def sort_key(self) -> tuple:
        """Graded-lex comparison key of the normalized form."""
        n = self.normalized()
        zero = (0,) * self.ctx.degree
        return (self.degree, tuple((0, zero) if m not in n.terms else (1, n.terms[m].sort_key())
                                   for m in monomials(self.degree)))

    def partial(self, var: int) -> "HomogeneousPolynomial":
        if self.degree == 0:
            return HomogeneousPolynomial(0, {}, self.ctx)
        terms = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                terms[tuple(ne)] = c * e[var]
        return HomogeneousPolynomial(self.degree - 1, terms, self.ctx)

    def gradient(self) -> tuple["HomogeneousPolynomial", ...]:
        return tuple(self.partial(i) for i in range(3))

    def __call__(self, p: "ProjectivePoint") -> FieldElement:
        return evaluate(self, p)

    # -- display ------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for m in monomials(self.degree):
            if m not in self.terms:
                continue
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip("xyz", m) if k)
            c = self.terms[m]
            if c.is_rational():
                q = c.to_fraction()
                neg, cs = q < 0, str(abs(q))
            else:
                neg, cs = False, f"({c})"
            sign = (" - " if neg else " + ") if out else ("-" if neg else "")
            if cs == "1" and mono:
                out += sign + mono
            else:
                out += sign + (f"{cs}*{mono}" if mono else cs)
        return out

    def __repr__(self):
        return f"HomogeneousPolynomial({self})"


class ProjectivePoint:
    """Point of P^2 normalized so the last nonzero coordinate is 1."""

    __slots__ = ("coords", "ctx")

    def __init__(self, coords: Sequence, ctx: FieldContext | None = None):
        if len(coords) != 3:
            raise GeometryError("a projective point needs three coordinates")
        if ctx is None:
            ctx = next((c.ctx for c in coords if isinstance(c, FieldElement)), QQ)
        cs = [ctx(c) for c in coords]
        last = next((c for c in reversed(cs) if c), None)
        if last is None:
            raise DegenerateInputError("all coordinates are zero")
        if last != 1:
            inv = last.inverse()
            cs = [c * inv for c in cs]
        self.coords = tuple(cs)
        self.ctx = ctx

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def evaluate(F: HomogeneousPolynomial, p: ProjectivePoint) -> FieldElement:
    if F.ctx != p.ctx:
        raise ContextMismatchError("polynomial and point live over different fields")
    x, y, z = p.coords
    pw = [_powers(v, F.degree) for v in (x, y, z)]
    acc = F.ctx.zero()
    for (a, b, c), coeff in F.terms.items():
        acc = acc + coeff * pw[0][a] * pw[1][b] * pw[2][c]
    return acc


def _powers(v: FieldElement, n: int) -> list[FieldElement]:
    out = [v.ctx.one()]
    for _ in range(n):
        out.append(out[-1] * v)
    return out


def multiplicity_at(F: HomogeneousPolynomial, p: ProjectivePoint) -> int:
    """Order of vanishing of F at p.

    Dehomogenize in a coordinate where p equals 1, move p to the origin and
    return the lowest total degree carrying a nonzero coefficient.
    """
    if F.is_zero():
        raise UndefinedMultiplicityError("multiplicity of the zero polynomial")
    if F.ctx != p.ctx:
        raise ContextMismatchError("polynomial and point live over different fields")
    chart = next(i for i in (2, 1, 0) if p.coords[i] == 1)
    return _chart_multiplicity(F, p, chart)


def _chart_multiplicity(F: HomogeneousPolynomial, p: ProjectivePoint, chart: int) -> int:
    if p.coords[chart] != 1:
        scale = p.coords[chart].inverse()
        coords = [c * scale for c in p.coords]
    else:
        coords = list(p.coords)
    free = [i for i in range(3) if i != chart]
    a, b = coords[free[0]], coords[free[1]]
    # affine terms: s^i t^j with s, t the two free variables
    aff: dict[tuple[int, int], FieldElement] = {}
    for e, c in F.terms.items():
        key = (e[free[0]], e[free[1]])
        aff[key] = aff[key] + c if key in aff else c
    top = max(i + j for i, j in aff)
    pa, pb = _powers(a, top), _powers(b, top)
    zero = F.ctx.zero()
    for k in range(top + 1):
        # coefficient of s^i t^(k-i) in F(s + a, t + b)
        for i in range(k + 1):
            j = k - i
            acc = zero
            for (e1, e2), c in aff.items():
                if e1 >= i and e2 >= j:
                    acc = acc + c * (comb(e1, i) * comb(e2, j)) * pa[e1 - i] * pb[e2 - j]
            if acc:
                return k
    raise UndefinedMultiplicityError("polynomial vanishes identically on the chart")


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> HomogeneousPolynomial:
    if p == q:
        raise DegenerateInputError("line through a point and itself")
    a, b, c = _cross(p.coords, q.coords)
    return HomogeneousPolynomial.linear(a, b, c, p.ctx).normalized()


def point_from_two_lines(L1: HomogeneousPolynomial, L2: HomogeneousPolynomial) -> ProjectivePoint:
    if L1.degree != 1 or L2.degree != 1:
        raise GeometryError("point_from_two_lines needs two linear forms")
    v = _cross(L1.coefficients(), L2.coefficients())
    if not any(v):
        raise DegenerateInputError("the lines are proportional")
    return ProjectivePoint(v, L1.ctx)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def conic_matrix(F: HomogeneousPolynomial) -> list[list[FieldElement]]:
    if F.degree != 2:
        raise GeometryError(f"expected a conic, got degree {F.degree}")
    c = F.coefficient
    h = F.ctx(1) / 2
    return [
        [c((2, 0, 0)), c((1, 1, 0)) * h, c((1, 0, 1)) * h],
        [c((1, 1, 0)) * h, c((0, 2, 0)), c((0, 1, 1)) * h],
        [c((1, 0, 1)) * h, c((0, 1, 1)) * h, c((0, 0, 2))],
    ]


def conic_rank(F: HomogeneousPolynomial) -> int:
    """Rank of the symmetric matrix of a conic: 3 smooth, 2 line pair, 1 double line."""
    if F.is_zero():
        raise GeometryError("zero conic")
    from .linsys import matrix_rank
    return matrix_rank(conic_matrix(F))


def tangent_line(F: HomogeneousPolynomial, p: ProjectivePoint) -> HomogeneousPolynomial | None:
    """Tangent line of F at a smooth point, or None if the gradient vanishes."""
    g = [evaluate(d, p) for d in F.gradient()]
    if not any(g):
        return None
    return HomogeneousPolynomial.linear(*g, ctx=F.ctx).normalized()


def product(forms: Iterable[HomogeneousPolynomial], ctx: FieldContext = QQ) -> HomogeneousPolynomial:
    acc = None
    for f in forms:
        acc = f if acc is None else acc * f
    return acc if acc is not None else HomogeneousPolynomial(0, {(0, 0, 0): 1}, ctx)


# -- JSON forms ---------------------------------------------------------------

def polynomial_to_json(F: HomogeneousPolynomial) -> dict:
    return {"degree": F.degree,
            "terms": [{"exp": list(m), "coeff": element_to_json(F.terms[m])}
                      for m in monomials(F.degree) if m in F.terms]}


def polynomial_from_json(data, ctx: FieldContext) -> HomogeneousPolynomial:
    if not isinstance(data, dict) or "degree" not in data or "terms" not in data:
        raise GeometryError("polynomial must be an object with 'degree' and 'terms'")
    d = data["degree"]
    if not isinstance(d, int):
        raise GeometryError("polynomial degree must be an integer")
    terms = {}
    for i, t in enumerate(data["terms"]):
        try:
            exp = tuple(t["exp"])
            coeff = t["coeff"]
        except (KeyError, TypeError):
            raise GeometryError(f"terms[{i}] must have 'exp' and 'coeff'") from None
        if exp in terms:
            raise GeometryError(f"terms[{i}]: repeated exponent {list(exp)}")
        terms[exp] = element_from_json(coeff, ctx)
    return HomogeneousPolynomial(d, terms, ctx)


def point_to_json(p: ProjectivePoint) -> dict:
    return {"coords": [element_to_json(c) for c in p.coords]}


def point_from_json(data, ctx: FieldContext) -> ProjectivePoint:
    coords = data["coords"] if isinstance(data, dict) else data
    if not isinstance(coords, list) or len(coords) != 3:
        raise GeometryError("point needs three coordinates")
    return ProjectivePoint([element_from_json(c, ctx) for c in coords], ctx)
