"""Multipoint Seshadri constants of O(1) at finite point sets, by certificate.

The constant is an infimum of deg(D) / sum_p mult_p(D) over irreducible
curves D.  It is never computed by exhaustion.  An explicit curve gives an
upper bound.  A lower bound comes from one of two Bezout certificates:

* arrangement-bezout: D . C >= sum_p m_p(D) m_p(C) against the whole
  arrangement C forces ratio >= min_p m_p(C) / deg(C) for non-components;
* interpolating-curve: a product Q of lines and smooth conics through every
  point forces ratio >= 1 / deg(Q) for curves that are not factors of Q.

Curves excluded by either argument are measured directly ("exhibited").
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arrangement import ArrangementError, GeometricArrangement, base_constant, require_geometry
from .field import field_from_json, field_to_json, format_rational, parse_rational
from .geometry import (HomogeneousPolynomial, ProjectivePoint, conic_rank, evaluate, line_through, monomials,
                       multiplicity_at, point_from_json, point_to_json, polynomial_from_json, polynomial_to_json)
from .linsys import MultiplicityAssignment, interpolate


class SeshadriError(ValueError):
    pass


class NoIncidenceError(SeshadriError):
    pass


class InvalidCertificateError(SeshadriError):
    pass


class UnsupportedFactorError(SeshadriError):
    pass


LINE, SMOOTH_CONIC, COMPONENT, ASSUMED = "line", "smooth-conic", "component-of-arrangement", "assumed"


@dataclass
class RatioReport:
    curve: HomogeneousPolynomial
    degree: int
    mult_sum: int
    ratio: Fraction
    irreducibility: str
    multiplicities: tuple[int, ...] = ()

    @property
    def incidence(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.multiplicities) if m)

    def key(self):
        return (self.ratio, self.curve.sort_key())

    def to_json(self) -> dict:
        return {"curve": polynomial_to_json(self.curve), "degree": self.degree, "mult_sum": self.mult_sum,
                "ratio": format_rational(self.ratio), "irreducibility": self.irreducibility}


def irreducibility_evidence(D: HomogeneousPolynomial, fallback: str = ASSUMED) -> str:
    if D.degree == 1:
        return LINE
    if D.degree == 2 and conic_rank(D) == 3:
        return SMOOTH_CONIC
    return fallback


def ratio_of(D: HomogeneousPolynomial, Z: Sequence[ProjectivePoint], irreducibility: str | None = None) -> RatioReport:
    """deg(D) / sum of multiplicities of D over Z."""
    if D.is_zero():
        raise SeshadriError("zero curve")
    mults = tuple(multiplicity_at(D, p) for p in Z)
    s = sum(mults)
    if s == 0:
        raise NoIncidenceError("curve misses every point of Z")
    ev = irreducibility or irreducibility_evidence(D)
    return RatioReport(D.normalized(), D.degree, s, Fraction(D.degree, s), ev, mults)


def _best(reports):
    return min(reports, key=RatioReport.key) if reports else None


# -- line search -------------------------------------------------------------------

@dataclass
class LineSearchResult:
    best: RatioReport
    mpl: int
    lines: list[RatioReport]


def search_lines(Z: Sequence[ProjectivePoint]) -> LineSearchResult:
    """All lines through two or more points of Z; best ratio and mpl(Z)."""
    Z = list(Z)
    if len(Z) < 2:
        raise SeshadriError("line search needs at least two points")
    covered: set[tuple[int, int]] = set()
    reports = []
    for i, j in itertools.combinations(range(len(Z)), 2):
        if (i, j) in covered:
            continue
        Lij = line_through(Z[i], Z[j])
        on = [n for n, p in enumerate(Z) if not evaluate(Lij, p)]
        covered.update(itertools.combinations(on, 2))
        mults = tuple(1 if n in on else 0 for n in range(len(Z)))
        reports.append(RatioReport(Lij, 1, len(on), Fraction(1, len(on)), LINE, mults))
    reports.sort(key=RatioReport.key)
    return LineSearchResult(reports[0], reports[0].mult_sum, reports)


# -- conic search ------------------------------------------------------------------

@dataclass
class ConicSearchResult:
    best: RatioReport | None
    conics: list[RatioReport]
    message: str = ""


def _conic_row_mod(p, pt):
    x, y, z = pt
    return [x * x % p, x * y % p, x * z % p, y * y % p, y * z % p, z * z % p]


def _kernel_mod(rows, p):
    """Kernel vector of a 5 x 6 matrix over GF(p), or None if the rank is below 5."""
    m = [list(r) for r in rows]
    piv_cols = []
    r = 0
    for c in range(6):
        piv = next((i for i in range(r, 5) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(5):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == 5:
            break
    if r < 5:
        return None
    free = next(c for c in range(6) if c not in piv_cols)
    v = [0] * 6
    v[free] = 1
    for row, c in zip(m, piv_cols):
        v[c] = -row[free] % p
    lead = next(x for x in v if x)
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in v)


def search_conics(Z: Sequence[ProjectivePoint], cutoff: Fraction | None = None,
                  collinear: Sequence[Sequence[int]] = ()) -> ConicSearchResult:
    """Smooth conics through 5-subsets of Z with the smallest ratio.

    With ``cutoff`` only conics of ratio <= cutoff are reported.  ``collinear``
    lists index sets of collinear points (from :func:`search_lines`); 5-subsets
    holding three of them span no smooth conic and are skipped.

    Each 5-subset is first solved over GF(p).  Reduction can only add
    incidences, so the GF(p) count bounds the true count from above and is a
    sound filter; surviving candidates are recomputed exactly.
    """
    Z = list(Z)
    n = len(Z)
    if n < 5:
        return ConicSearchResult(None, [], "no conic candidates")
    if not collinear:
        collinear = [r.incidence for r in search_lines(Z).lines if r.mult_sum >= 3]
    need = 5 if cutoff is None else max(5, math.ceil(Fraction(2) / cutoff))
    if need > n:
        return ConicSearchResult(None, [], "no conic can reach the cutoff")
    ctx = Z[0].ctx
    for skip in range(10):
        p, root = ctx.find_split_prime(skip=skip)
        try:
            zmod = [_conic_row_mod(p, [c.mod_p(p, root) for c in pt.coords]) for pt in Z]
            break
        except ZeroDivisionError:
            continue  # a coordinate denominator vanishes mod p
    else:
        raise SeshadriError("no usable prime for the conic prefilter")
    col_sets = [frozenset(s) for s in collinear if len(s) >= 3]
    on_line = [[s for s in col_sets if i in s] for i in range(n)]

    # a conic with >= need points has its five smallest indices among the first n - need + 5
    limit = n - need + 5
    classes: dict[tuple, list[tuple[int, ...]]] = {}
    counts: dict[tuple, int] = {}
    exact_fallback: list[tuple[int, ...]] = []
    for S in itertools.combinations(range(limit), 5):
        if _has_collinear_triple(S, on_line):
            continue
        v = _kernel_mod([zmod[i] for i in S], p)
        if v is None:
            exact_fallback.append(S)
            continue
        if v in counts:
            classes[v].append(S)
            continue
        cnt = sum(1 for row in zmod if not sum(a * b for a, b in zip(row, v)) % p)
        counts[v] = cnt
        classes[v] = [S]

    found: dict[HomogeneousPolynomial, RatioReport] = {}
    best_count = 0
    # unknown GF(p) counts first, then by decreasing upper bound on the count
    pending = [(n, exact_fallback)] + sorted(((counts[v], classes[v]) for v in classes if counts[v] >= need),
                                             key=lambda t: -t[0])
    for bound, subsets in pending:
        if bound < best_count:
            break
        remaining = list(subsets)
        while remaining:
            S = remaining[0]
            rep = _exact_conic(Z, S)
            if rep is None:
                remaining = remaining[1:]
                continue
            T = set(rep.incidence)
            remaining = [s for s in remaining if not set(s) <= T]
            if rep.irreducibility == SMOOTH_CONIC and rep.mult_sum >= need:
                found.setdefault(rep.curve, rep)
                best_count = max(best_count, rep.mult_sum)
    conics = sorted(found.values(), key=RatioReport.key)
    if cutoff is not None:
        conics = [c for c in conics if c.ratio <= cutoff]
    return ConicSearchResult(conics[0] if conics else None, conics,
                             "" if conics else "no smooth conic candidates")


def _has_collinear_triple(S, on_line) -> bool:
    seen: dict[frozenset, int] = {}
    for i in S:
        for s in on_line[i]:
            seen[s] = seen.get(s, 0) + 1
            if seen[s] >= 3:
                return True
    return False


def _exact_conic(Z, S) -> RatioReport | None:
    res = interpolate(2, MultiplicityAssignment.uniform([Z[i] for i in S]), verify=False)
    if res.dimension != 1:
        return None
    C = res.basis[0]
    if conic_rank(C) != 3:
        return None
    return ratio_of(C, Z, SMOOTH_CONIC)


# -- certificates --------------------------------------------------------------------

@dataclass
class LowerBoundCertificate:
    kind: str
    bound: Fraction
    exhibited: list[RatioReport]
    points: list[ProjectivePoint]
    # arrangement-bezout
    min_mult: int | None = None
    arrangement_degree: int | None = None
    curves: list[HomogeneousPolynomial] = field(default_factory=list)
    # interpolating-curve
    factors: list[tuple[HomogeneousPolynomial, str]] = field(default_factory=list)
    total_degree: int | None = None

    @property
    def bezout_bound(self) -> Fraction:
        if self.kind == "arrangement-bezout":
            return Fraction(self.min_mult, self.arrangement_degree)
        return Fraction(1, self.total_degree)

    def shape(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f, _ in self.factors:
            out[f.degree] = out.get(f.degree, 0) + 1
        return out

    def to_json(self) -> dict:
        data = {"kind": self.kind, "bound": format_rational(self.bound),
                "exhibited": [r.to_json() for r in self.exhibited]}
        if self.kind == "arrangement-bezout":
            data["min_mult"] = self.min_mult
            data["curves"] = [polynomial_to_json(c) for c in self.curves]
        else:
            data["factors"] = [{"curve": polynomial_to_json(f), "irreducibility": ev} for f, ev in self.factors]
        return data


def component_ratios(G: GeometricArrangement) -> list[RatioReport]:
    G = require_geometry(G)
    Z = G.singular_points
    return [ratio_of(C, Z, irreducibility_evidence(C, COMPONENT)) for C in G.curves]


def arrangement_bezout_bound(G: GeometricArrangement) -> LowerBoundCertificate:
    """Bound min_p m_p(C) / deg(C) for non-components, components measured directly."""
    G = require_geometry(G)
    if G.t.get(G.k, 0):
        raise ArrangementError("arrangement-bezout needs t_k = 0")
    min_mult = min(ip.multiplicity for ip in G.points)
    exhibited = component_ratios(G)
    bez = Fraction(min_mult, G.d * G.k)
    final = min([bez] + [r.ratio for r in exhibited])
    return LowerBoundCertificate("arrangement-bezout", final, exhibited, G.singular_points,
                                 min_mult=min_mult, arrangement_degree=G.d * G.k, curves=list(G.curves))


def interpolating_curve_bound(Z: Sequence[ProjectivePoint], factors: Sequence[HomogeneousPolynomial]
                              ) -> LowerBoundCertificate:
    """Bound 1/q from a product of lines and smooth conics (total degree q) through Z."""
    Z = list(Z)
    checked = []
    for f in factors:
        if f.degree == 1:
            checked.append((f.normalized(), LINE))
        elif f.degree == 2:
            if conic_rank(f) != 3:
                raise UnsupportedFactorError("conic factor is not smooth, irreducibility unverified")
            checked.append((f.normalized(), SMOOTH_CONIC))
        else:
            raise UnsupportedFactorError(f"factor of degree {f.degree} is not supported")
    for n, p in enumerate(Z):
        if all(evaluate(f, p) for f, _ in checked):
            raise InvalidCertificateError(f"point {n} {p} is not on the interpolating curve")
    q = sum(f.degree for f, _ in checked)
    exhibited = []
    for f, ev in checked:
        try:
            exhibited.append(ratio_of(f, Z, ev))
        except NoIncidenceError:
            pass
    final = min([Fraction(1, q)] + [r.ratio for r in exhibited])
    return LowerBoundCertificate("interpolating-curve", final, exhibited, Z, factors=checked, total_degree=q)


def find_interpolating_factors(Z: Sequence[ProjectivePoint], candidates: Sequence[RatioReport], max_degree: int,
                               max_factors: int = 4) -> list[RatioReport] | None:
    """Fewest-degree cover of Z by candidate lines/conics, total degree <= max_degree."""
    n = len(Z)
    full = (1 << n) - 1
    cands = []
    seen = set()
    for r in sorted(candidates, key=lambda r: (-r.mult_sum / r.degree, r.key())):
        if r.degree > 2 or r.curve in seen:
            continue
        seen.add(r.curve)
        mask = sum(1 << i for i in r.incidence)
        if mask:
            cands.append((r, mask))
    if not cands:
        return None
    density = max(bin(m).count("1") / r.degree for r, m in cands)
    by_point = [[c for c in cands if c[1] >> i & 1] for i in range(n)]

    def dfs(uncovered, budget, left, chosen):
        if not uncovered:
            return list(chosen)
        if left == 0 or bin(uncovered).count("1") > density * budget:
            return None
        low = (uncovered & -uncovered).bit_length() - 1
        for r, m in by_point[low]:
            if r.degree <= budget:
                chosen.append(r)
                got = dfs(uncovered & ~m, budget - r.degree, left - 1, chosen)
                chosen.pop()
                if got is not None:
                    return got
        return None

    for q in range(1, max_degree + 1):
        got = dfs(full, q, max_factors, [])
        if got is not None:
            return got
    return None


@dataclass
class SeshadriResult:
    lower: Fraction
    certificate: LowerBoundCertificate
    upper: Fraction
    witness: RatioReport
    exact: Fraction | None
    mpl: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        ctx = self.witness.curve.ctx
        return {"field": field_to_json(ctx),
                "points": [point_to_json(p) for p in self.certificate.points],
                "upper": {"ratio": format_rational(self.upper), "witness": polynomial_to_json(self.witness.curve)},
                "lower": self.certificate.to_json(),
                "exact": format_rational(self.exact) if self.exact is not None else None}


def compute_seshadri(G: GeometricArrangement, max_search_degree: int = 2) -> SeshadriResult:
    G = require_geometry(G)
    if G.k < 3:
        raise ArrangementError("k = 2 is excluded from certification")
    if G.t.get(G.k, 0):
        raise ArrangementError("certification needs t_k = 0")
    if max_search_degree not in (1, 2):
        raise SeshadriError("max_search_degree must be 1 or 2")
    Z = G.singular_points
    comps = component_ratios(G)
    lines = search_lines(Z)
    witnesses = comps + [lines.best]
    upper_rep = _best(witnesses)
    conics: list[RatioReport] = []
    if max_search_degree >= 2:
        collinear = [r.incidence for r in lines.lines if r.mult_sum >= 3]
        cs = search_conics(Z, cutoff=upper_rep.ratio, collinear=collinear)
        conics = cs.conics
        upper_rep = _best(witnesses + conics)
    upper = upper_rep.ratio
    notes = []

    cert = arrangement_bezout_bound(G)
    if cert.bound < upper:
        pool = lines.lines + [c for c in comps if c.degree <= 2] + conics
        chosen = find_interpolating_factors(Z, pool, max_degree=math.floor(1 / upper))
        if chosen is not None:
            alt = interpolating_curve_bound(Z, [r.curve for r in chosen])
            if alt.bound > cert.bound:
                cert = alt
        else:
            notes.append("no interpolating product of lines and conics reaches the upper bound")
    exact = upper if cert.bound == upper else None
    if exact is None:
        notes.append("bounds do not meet; reporting an interval")
    return SeshadriResult(cert.bound, cert, upper, upper_rep, exact, lines.mpl, notes)


def naive_equality_probe(G: GeometricArrangement, result: SeshadriResult | None = None) -> dict:
    """Compare the exact constant with 1/bs(C) and the candidate values 1/(d(k-1)), 1/(d^2(k-1))."""
    G = require_geometry(G)
    result = result or compute_seshadri(G)
    if result.exact is None:
        raise SeshadriError("probe needs an exact value")
    bs = base_constant(G)
    eps = result.exact
    d, k = G.d, G.k
    return {"bs": bs, "inverse_bs": Fraction(1, bs), "epsilon": eps, "holds": eps == Fraction(1, bs),
            "candidate_d": Fraction(1, d * (k - 1)), "candidate_d2": Fraction(1, d * d * (k - 1)),
            "above_star_bound": eps >= Fraction(1, d * (k - 1)),
            "some_curve_has_d2_points": bs == d * d * (k - 1)}


# -- serialization and re-verification ----------------------------------------------

def verify_certificate(data: dict) -> tuple[bool, list[str]]:
    """Re-check a serialized result from scratch."""
    msgs: list[str] = []
    try:
        ctx = field_from_json(data["field"])
        Z = [point_from_json(p, ctx) for p in data["points"]]
        upper = parse_rational(data["upper"]["ratio"])
        witness = polynomial_from_json(data["upper"]["witness"], ctx)
        low = data["lower"]
        bound = parse_rational(low["bound"])
        kind = low["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        return False, [f"malformed certificate: {exc}"]

    ok = True
    try:
        w = ratio_of(witness, Z)
        if w.ratio != upper:
            ok = False
            msgs.append(f"witness ratio {w.ratio} ≠ stated {upper}")
        if w.irreducibility == ASSUMED:
            msgs.append("witness irreducibility assumed (degree > 2)")
    except (NoIncidenceError, ValueError) as exc:
        ok = False
        msgs.append(f"witness invalid: {exc}")

    try:
        if kind == "interpolating-curve":
            factors = [polynomial_from_json(f["curve"], ctx) for f in low["factors"]]
            cert = interpolating_curve_bound(Z, factors)
        elif kind == "arrangement-bezout":
            curves = [polynomial_from_json(c, ctx) for c in low["curves"]]
            cert = _bezout_from_curves(Z, curves)
            if cert.min_mult != low.get("min_mult"):
                ok = False
                msgs.append(f"min_mult recomputed as {cert.min_mult}, stated {low.get('min_mult')}")
        else:
            return False, msgs + [f"unknown certificate kind {kind!r}"]
    except (SeshadriError, ValueError) as exc:
        return False, msgs + [f"lower bound invalid: {exc}"]
    if cert.bound != bound:
        ok = False
        msgs.append(f"lower bound recomputed as {cert.bound}, stated {bound}")
    if cert.bound > upper:
        ok = False
        msgs.append("lower bound exceeds upper bound")
    exact = data.get("exact")
    expect_exact = cert.bound == upper
    if (exact is not None) != expect_exact or (exact is not None and parse_rational(exact) != upper):
        ok = False
        msgs.append("exact value inconsistent with the bounds")
    if ok:
        msgs.append(f"verified: {format_rational(cert.bound)} <= eps <= {format_rational(upper)}")
    return ok, msgs


def _bezout_from_curves(Z, curves) -> LowerBoundCertificate:
    if not curves:
        raise InvalidCertificateError("no arrangement curves")
    mults = [sum(multiplicity_at(C, p) for C in curves) for p in Z]
    if min(mults) == 0:
        raise InvalidCertificateError("a point of Z is not on the arrangement")
    for C in curves:
        if C.degree == 2 and conic_rank(C) != 3:
            raise UnsupportedFactorError("arrangement conic is singular")
    deg = sum(C.degree for C in curves)
    exhibited = [ratio_of(C, Z, irreducibility_evidence(C, COMPONENT)) for C in curves]
    final = min([Fraction(min(mults), deg)] + [r.ratio for r in exhibited])
    return LowerBoundCertificate("arrangement-bezout", final, exhibited, list(Z), min_mult=min(mults),
                                 arrangement_degree=deg, curves=list(curves))
