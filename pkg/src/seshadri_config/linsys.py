"""Fat-point interpolation: forms of degree e with prescribed multiplicities.

A point p with multiplicity m imposes the vanishing at p of every partial
derivative of order m-1 (C(m+1, 2) rows).  In characteristic zero Euler's
relation then forces all lower orders to vanish as well.

Kernels are computed exactly by fraction-free (Bareiss) elimination.  For
systems too large for exact elimination the dimension can be bounded from
above by the rank of the reduction modulo a prime with a root of the
minimal polynomial: reduction never raises the rank, so
``dim over K <= dim over GF(p)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .field import FieldContext, FieldElement, QQ
from .geometry import HomogeneousPolynomial, ProjectivePoint, monomials, multiplicity_at, evaluate


class InternalConsistencyError(RuntimeError):
    """An interpolated form failed re-verification; elimination is broken."""


@dataclass(frozen=True)
class MultiplicityAssignment:
    entries: tuple[tuple[ProjectivePoint, int], ...]

    def __post_init__(self):
        pts = [p for p, _ in self.entries]
        if len(set(pts)) != len(pts):
            raise ValueError("points of a multiplicity assignment must be distinct")
        if any(m < 1 for _, m in self.entries):
            raise ValueError("multiplicities must be >= 1")

    @classmethod
    def uniform(cls, points: Sequence[ProjectivePoint], m: int = 1) -> "MultiplicityAssignment":
        return cls(tuple((p, m) for p in points))

    @property
    def ctx(self) -> FieldContext:
        return self.entries[0][0].ctx if self.entries else QQ

    def conditions(self) -> int:
        return sum(comb(m + 1, 2) for _, m in self.entries)


@dataclass
class LinearSystemResult:
    degree: int
    conditions: int
    ambient: int
    rank: int
    dimension: int
    basis: list[HomogeneousPolynomial] = field(default_factory=list)

    def to_json(self) -> dict:
        from .geometry import polynomial_to_json
        return {"degree": self.degree, "ambient": self.ambient, "conditions": self.conditions,
                "rank": self.rank, "dimension": self.dimension,
                "basis": [polynomial_to_json(b) for b in self.basis]}


# -- conditions ---------------------------------------------------------------

def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _condition_rows(e: int, point_coords, m: int, one, mul):
    """Rows for one point; ``point_coords`` are scalars supporting ``mul``."""
    mons = monomials(e)
    pw = []
    for v in point_coords:
        row = [one]
        for _ in range(e):
            row.append(mul(row[-1], v))
        pw.append(row)
    rows = []
    # order-(m-1) partials of a degree-e form vanish identically when m > e + 1;
    # order e then kills every coefficient, matching "no nonzero form has mult > e"
    for alpha in monomials(min(m - 1, e)):
        row = []
        for mon in mons:
            if mon[0] < alpha[0] or mon[1] < alpha[1] or mon[2] < alpha[2]:
                row.append(None)
                continue
            k = _falling(mon[0], alpha[0]) * _falling(mon[1], alpha[1]) * _falling(mon[2], alpha[2])
            val = mul(mul(pw[0][mon[0] - alpha[0]], pw[1][mon[1] - alpha[1]]), pw[2][mon[2] - alpha[2]])
            row.append((k, val))
        rows.append(row)
    return rows


def conditions_matrix(e: int, M: MultiplicityAssignment) -> list[list[FieldElement]]:
    """Exact conditions; columns are degree-e monomials in graded-lex order."""
    ctx = M.ctx
    zero = ctx.zero()
    out = []
    for p, m in M.entries:
        for row in _condition_rows(e, p.coords, m, ctx.one(), lambda a, b: a * b):
            out.append([zero if c is None else c[1] * c[0] for c in row])
    return out


def conditions_matrix_mod_p(e: int, M: MultiplicityAssignment, p: int, root: int) -> np.ndarray:
    rows = []
    for pt, m in M.entries:
        coords = [c.mod_p(p, root) for c in pt.coords]
        for row in _condition_rows(e, coords, m, 1, lambda a, b: a * b % p):
            rows.append([0 if c is None else c[0] % p * c[1] % p for c in row])
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(monomials(e)))


# -- exact elimination ----------------------------------------------------------

def _to_integer_rows(matrix) -> list[list[int]] | None:
    """Clear denominators row by row when every entry is rational."""
    out = []
    for row in matrix:
        fr = []
        for x in row:
            if isinstance(x, FieldElement):
                if not x.is_rational():
                    return None
                fr.append(Fraction(x.num[0], x.den))
            else:
                fr.append(Fraction(x))
        den = 1
        for x in fr:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def _bareiss(rows: list[list], zero, exact_int: bool) -> tuple[list[list], list[int]]:
    """Fraction-free forward elimination.

    Pivot rule: columns left to right, first remaining row (in current
    order) with a nonzero entry.  Returns the echelon rows and pivot columns.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        prow = m[r]
        inv_prev = None if exact_int else (prev.inverse() if isinstance(prev, FieldElement) else Fraction(1, prev))
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    v = p * row[j] - f * prow[j]
                    row[j] = v // prev if exact_int else v * inv_prev
            else:
                for j in range(c + 1, ncols):
                    v = p * row[j]
                    row[j] = v // prev if exact_int else v * inv_prev
            row[c] = zero
        pivots.append(c)
        prev = p
        r += 1
    return m[:r], pivots


def _echelon(matrix):
    if not matrix:
        return [], [], None
    ints = _to_integer_rows(matrix)
    if ints is not None:
        rows, piv = _bareiss(ints, 0, exact_int=True)
        return rows, piv, None
    zero = matrix[0][0].ctx.zero()
    rows, piv = _bareiss(matrix, zero, exact_int=False)
    return rows, piv, matrix[0][0].ctx


def matrix_rank(matrix) -> int:
    return len(_echelon(matrix)[1])


def kernel_basis(matrix, ncols: int | None = None) -> list[list]:
    """Exact basis of the right nullspace, each vector scaled so its first nonzero entry is 1.

    Entries of the result are Fractions for rational input, FieldElements otherwise.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, piv, ctx = _echelon(matrix)
    if ctx is None:
        conv = Fraction
        zero, one = Fraction(0), Fraction(1)
    else:
        conv = lambda x: x  # noqa: E731
        zero, one = ctx.zero(), ctx.one()
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fcol in free:
        v = [zero] * ncols
        v[fcol] = one
        for r in range(len(piv) - 1, -1, -1):
            pc = piv[r]
            row = rows[r]
            s = zero
            for j in range(pc + 1, ncols):
                if v[j] and row[j]:
                    s = s + conv(row[j]) * v[j]
            v[pc] = -s / conv(row[pc])
        lead = next(x for x in v if x)
        if lead != 1:
            inv = one / lead
            v = [x * inv for x in v]
        basis.append(v)
    return basis


# -- modular rank -----------------------------------------------------------------

def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) of an integer matrix; p must be below 2**31."""
    m = np.array(a, dtype=np.int64) % p
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = m[r] * inv % p
        below = m[r + 1:, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + r + 1
            m[idx] = (m[idx] - (below[mask][:, None] * m[r]) % p) % p
        r += 1
    return r


# -- interpolation --------------------------------------------------------------

def interpolate(e: int, M: MultiplicityAssignment, verify: bool = True) -> LinearSystemResult:
    if e < 1:
        raise ValueError("degree must be >= 1")
    ctx = M.ctx
    mons = monomials(e)
    mat = conditions_matrix(e, M)
    if mat:
        vecs = kernel_basis(mat, len(mons))
    else:
        vecs = [[ctx.one() if i == j else ctx.zero() for j in range(len(mons))] for i in range(len(mons))]
    basis = [HomogeneousPolynomial(e, dict(zip(mons, v)), ctx) for v in vecs]
    if verify:
        for b in basis:
            for p, m in M.entries:
                if multiplicity_at(b, p) < m:
                    raise InternalConsistencyError(f"basis form fails multiplicity {m} at {p}")
    dim = len(basis)
    return LinearSystemResult(degree=e, conditions=M.conditions(), ambient=len(mons),
                              rank=len(mons) - dim, dimension=dim, basis=basis)


def modular_dimension(e: int, M: MultiplicityAssignment, primes: int = 2) -> tuple[int, list[int]]:
    """Smallest GF(p) kernel dimension over a few primes: an upper bound for the true one."""
    ctx = M.ctx
    ambient = len(monomials(e))
    best = ambient
    used = []
    k = 0
    while len(used) < primes:
        p, root = ctx.find_split_prime(skip=k)
        k += 1
        try:
            a = conditions_matrix_mod_p(e, M, p, root)
        except ZeroDivisorError:
            continue  # a coordinate denominator vanishes mod p
        best = min(best, ambient - rank_mod_p(a, p))
        used.append(p)
    return best, used


# size above which the unique-member check switches to the modular bound
EXACT_AMBIENT_LIMIT = 70


def unique_member_check(G, exact_limit: int = EXACT_AMBIENT_LIMIT, seed: int = 0) -> dict:
    """Is the arrangement's own series |deg(C) H - sum m_p E_p| a single member?

    The dimension reported is the vector-space dimension of forms.
    """
    from .arrangement import curve_product, require_geometry

    G = require_geometry(G)
    if G.t.get(G.k, 0):
        return {"applicable": False, "reason": "t_k != 0"}
    e = G.d * G.k
    M = MultiplicityAssignment(tuple((ip.point, ip.multiplicity) for ip in G.points))
    ambient = len(monomials(e))
    prod = curve_product(G)
    report = {"applicable": True, "degree": e, "ambient": ambient, "conditions": M.conditions()}
    if ambient <= exact_limit:
        res = interpolate(e, M)
        report.update(method="exact", rank=res.rank, dimension=res.dimension)
        if res.dimension == 1:
            report["proportional_to_product"] = _proportional_at_random_points(
                res.basis[0], prod, 2 * ambient, seed)
    else:
        # product is a member: each of the m_p smooth incident curves contributes 1
        member = all(sum(multiplicity_at(G.curves[i], ip.point) for i in ip.incident) >= ip.multiplicity
                     for ip in G.points)
        upper, primes = modular_dimension(e, M)
        lower = 1 if member else 0
        report.update(method="modular-bound", dimension_lower=lower, dimension_upper=upper,
                      primes=primes)
        if lower == upper:
            report["dimension"] = upper
            report["rank"] = ambient - upper
            report["proportional_to_product"] = upper == 1
    report["unique"] = report.get("dimension") == 1 and report.get("proportional_to_product", False)
    return report


def _proportional_at_random_points(B: HomogeneousPolynomial, P: HomogeneousPolynomial, n: int,
                                   seed: int) -> bool:
    rng = random.Random(seed)
    ctx = B.ctx
    pts = [ProjectivePoint([rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(1, 50)], ctx)
           for _ in range(n)]
    vals = [(evaluate(B, q), evaluate(P, q)) for q in pts]
    ref = next(((b, pv) for b, pv in vals if pv), None)
    if ref is None:
        return False
    lam = ref[0] / ref[1]
    return all(b == lam * pv for b, pv in vals)
