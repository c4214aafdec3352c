"""d-arrangements: combinatorics, geometric verification and the classical counts.

A d-arrangement is k >= 3 smooth curves of common degree d whose singular
points are all ordinary and with no point common to every curve.  The
combinatorial layer is (k, d, t) where t[r] counts r-fold points; the
geometric layer adds the curves and the incidence-annotated singular points.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .field import FieldContext, QQ
from .geometry import (HomogeneousPolynomial, ProjectivePoint, conic_rank, evaluate, point_from_two_lines,
                       product, tangent_line, DegenerateInputError)


class ArrangementError(ValueError):
    pass


class MissingGeometryError(ArrangementError):
    pass


class UndefinedError(ArrangementError):
    pass


class OutOfRangeError(ArrangementError):
    pass


def make_tvector(counts: Mapping) -> dict[int, int]:
    t = {}
    for r, n in counts.items():
        r, n = int(r), int(n)
        if r < 2:
            raise ArrangementError(f"t-vector key {r} < 2")
        if n < 0:
            raise ArrangementError(f"t_{r} = {n} is negative")
        if n:
            t[r] = n
    return dict(sorted(t.items()))


def tvector_from_list(values: Sequence[int]) -> dict[int, int]:
    """(t2, t3, t4, ...) as printed in tables."""
    return make_tvector({r: v for r, v in enumerate(values, start=2)})


def format_tvector(t: Mapping[int, int]) -> str:
    if not t:
        return "()"
    top = max(t)
    return "(" + ",".join(str(t.get(r, 0)) for r in range(2, top + 1)) + ")"


@dataclass
class CombinatorialArrangement:
    k: int
    d: int
    t: dict[int, int]
    name: str = ""

    def __post_init__(self):
        self.t = make_tvector(self.t)
        if self.d < 1:
            raise ArrangementError("degree d must be >= 1")
        if self.k < 2:
            raise ArrangementError("an arrangement needs at least two curves")
        if self.k == 2:
            warnings.warn("k = 2 is the trivial case; excluded from Seshadri certification",
                          stacklevel=3)

    @property
    def base(self) -> "CombinatorialArrangement":
        return self

    @property
    def f0(self) -> int:
        return sum(self.t.values())

    @property
    def f1(self) -> int:
        return sum(r * n for r, n in self.t.items())

    @property
    def total_degree(self) -> int:
        return self.d * self.k

    def has_geometry(self) -> bool:
        return False


@dataclass(frozen=True)
class IncidencePoint:
    point: ProjectivePoint
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass
class GeometricArrangement(CombinatorialArrangement):
    curves: list[HomogeneousPolynomial] = field(default_factory=list)
    points: list[IncidencePoint] = field(default_factory=list)
    ctx: FieldContext = QQ
    # set for deliberately degenerate inputs such as pencils
    allow_tk: bool = False

    def has_geometry(self) -> bool:
        return True

    @property
    def base(self) -> CombinatorialArrangement:
        return CombinatorialArrangement(self.k, self.d, dict(self.t), self.name)

    @property
    def singular_points(self) -> list[ProjectivePoint]:
        return [ip.point for ip in self.points]

    def points_on(self, i: int) -> list[IncidencePoint]:
        return [ip for ip in self.points if i in ip.incident]


def require_geometry(A) -> GeometricArrangement:
    if not isinstance(A, GeometricArrangement) or not A.curves:
        raise MissingGeometryError("operation needs the geometric layer (curves and points)")
    return A


def curve_product(G: GeometricArrangement) -> HomogeneousPolynomial:
    return product(G.curves, G.ctx)


def tvector_from_points(points: Sequence[IncidencePoint]) -> dict[int, int]:
    t: dict[int, int] = {}
    for ip in points:
        t[ip.multiplicity] = t.get(ip.multiplicity, 0) + 1
    return make_tvector(t)


# -- reports --------------------------------------------------------------------

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


@dataclass
class Report:
    check: str
    status: str
    detail: dict = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"check": self.check, "status": self.status, "detail": _jsonable(self.detail),
                "messages": list(self.messages)}

    def __str__(self):
        text = f"{self.check}: {self.status.upper()}"
        if self.messages:
            text += "\n" + "\n".join("  " + m for m in self.messages)
        return text


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# -- combinatorial checks ----------------------------------------------------------

def validate_combinatorics(A: CombinatorialArrangement) -> Report:
    """d^2 * C(k,2) == sum_r C(r,2) t_r."""
    lhs = A.d ** 2 * comb(A.k, 2)
    rhs = sum(comb(r, 2) * n for r, n in A.t.items())
    ok = lhs == rhs
    return Report("combinatorial-count", PASS if ok else FAIL, {"lhs": lhs, "rhs": rhs},
                  [f"{lhs} {'=' if ok else '≠'} {rhs}"])


def f_numbers(A: CombinatorialArrangement) -> tuple[int, int]:
    return A.f0, A.f1


def epsilon_config(A: CombinatorialArrangement) -> Fraction:
    """Configurational Seshadri constant d*k / f1."""
    if A.f1 <= 0:
        raise UndefinedError("arrangement has no singular points")
    return Fraction(A.d * A.k, A.f1)


def hirzebruch_check(A: CombinatorialArrangement) -> Report:
    """t2 + t3 >= k + sum_{r>=4} (r-4) t_r for k >= 6 lines with t_k = t_{k-1} = 0."""
    t = A.t
    if A.d != 1 or A.k < 6 or t.get(A.k, 0) or t.get(A.k - 1, 0):
        return Report("hirzebruch", NOT_APPLICABLE, {}, ["hypotheses not met (need d=1, k>=6, t_k=t_{k-1}=0)"])
    lhs = t.get(2, 0) + t.get(3, 0)
    rhs = A.k + sum((r - 4) * n for r, n in t.items() if r >= 4)
    ok = lhs >= rhs
    return Report("hirzebruch", PASS if ok else FAIL, {"lhs": lhs, "rhs": rhs},
                  [f"{lhs} {'≥' if ok else '<'} {rhs}"])


def prsz_check(A: CombinatorialArrangement) -> Report:
    """(7d/2 - 9/2) d k + t2 + t3 >= sum_{r>=4} (r-4) t_r for d >= 2, k >= 3, t_k = 0."""
    t = A.t
    if A.d < 2 or A.k < 3 or t.get(A.k, 0):
        return Report("prsz", NOT_APPLICABLE, {}, ["hypotheses not met (need d>=2, k>=3, t_k=0)"])
    lhs = (Fraction(7 * A.d, 2) - Fraction(9, 2)) * A.d * A.k + t.get(2, 0) + t.get(3, 0)
    rhs = Fraction(sum((r - 4) * n for r, n in t.items() if r >= 4))
    ok = lhs >= rhs
    return Report("prsz", PASS if ok else FAIL, {"lhs": lhs, "rhs": rhs},
                  [f"{lhs} {'≥' if ok else '<'} {rhs}"])


def theorem_hypotheses(A: CombinatorialArrangement) -> tuple[bool, str]:
    """Whether the lower bound on the configurational constant is proved for A.

    For lines the stated extra hypothesis is read as Hirzebruch's
    (k >= 6, t_k = t_{k-1} = 0); the d >= 2 case needs t_k = 0.
    """
    if A.k < 3:
        return False, "k < 3"
    if A.d == 1:
        if A.k < 6 or A.t.get(A.k, 0) or A.t.get(A.k - 1, 0):
            return False, "d=1 requires k>=6 and t_k=t_{k-1}=0 (stated hypothesis 't_{d-1}=0' is read this way)"
        return True, "d=1 under Hirzebruch hypotheses"
    if A.t.get(A.k, 0):
        return False, "t_k != 0"
    return True, "d>=2 with t_k=0"


def theorem_lower_bound(A: CombinatorialArrangement) -> Fraction:
    """1 / (2dk + 3d/2 - 9/2) = 2 / (4dk + 3d - 9)."""
    if A.k < 3:
        raise OutOfRangeError("the lower bound needs k >= 3")
    den = 4 * A.d * A.k + 3 * A.d - 9
    if den <= 0:
        raise OutOfRangeError(f"denominator 4dk+3d-9 = {den} is not positive")
    return Fraction(2, den)


# -- geometric checks --------------------------------------------------------------

def per_curve_check(G: GeometricArrangement) -> Report:
    """d^2 (k-1) == sum over singular points p on C_i of (m_p - 1), for every i."""
    G = require_geometry(G)
    target = G.d ** 2 * (G.k - 1)
    sums = []
    msgs = []
    for i in range(G.k):
        s = sum(ip.multiplicity - 1 for ip in G.points_on(i))
        sums.append(s)
        if s != target:
            msgs.append(f"curve {i}: {s} ≠ {target}")
    ok = not msgs
    if ok:
        msgs.append(f"every curve: {target} = {G.d}^2*({G.k}-1)")
    return Report("per-curve-count", PASS if ok else FAIL, {"target": target, "sums": sums}, msgs)


def base_constant(G: GeometricArrangement) -> int:
    """Largest number of singular points on a single curve."""
    G = require_geometry(G)
    return max(len(G.points_on(i)) for i in range(G.k))


def verify_geometry(G: GeometricArrangement) -> Report:
    """Check incidences, ordinarity, the recomputed t-vector and t_k = 0.

    Together with the combinatorial count this also certifies that the listed
    points exhaust the intersections: by Bezout each pair of curves meets in
    d^2 points counted with multiplicity, and transversal meetings count once.
    """
    G = require_geometry(G)
    msgs: list[str] = []
    checks = {"incidence": True, "multiplicity": True, "ordinary": True, "t_vector": True,
              "no_common_point": True, "smooth_components": True}
    for n, ip in enumerate(G.points):
        on = tuple(i for i, C in enumerate(G.curves) if not evaluate(C, ip.point))
        if on != tuple(sorted(ip.incident)):
            checks["incidence"] = False
            msgs.append(f"points[{n}] {ip.point}: listed on {list(ip.incident)}, actually on {list(on)}")
        if ip.multiplicity < 2:
            checks["multiplicity"] = False
            msgs.append(f"points[{n}]: multiplicity {ip.multiplicity} < 2")
        tangents = []
        for i in ip.incident:
            if i >= G.k:
                checks["incidence"] = False
                msgs.append(f"points[{n}]: curve index {i} out of range")
                continue
            tl = tangent_line(G.curves[i], ip.point)
            if tl is None:
                checks["ordinary"] = False
                msgs.append(f"points[{n}]: curve {i} is singular at {ip.point}")
            else:
                tangents.append(tl)
        if len(set(tangents)) != len(tangents):
            checks["ordinary"] = False
            msgs.append(f"points[{n}]: two incident curves share a tangent at {ip.point}")
    t = tvector_from_points(G.points)
    if t != G.t:
        checks["t_vector"] = False
        msgs.append(f"recomputed t {t} differs from stored {G.t}")
    if (t.get(G.k, 0) or G.t.get(G.k, 0)) and not G.allow_tk:
        checks["no_common_point"] = False
        msgs.append("some point lies on all curves (t_k != 0)")
    for i, C in enumerate(G.curves):
        if C.degree != G.d:
            checks["smooth_components"] = False
            msgs.append(f"curve {i} has degree {C.degree}, expected {G.d}")
        elif C.degree == 2 and conic_rank(C) != 3:
            checks["smooth_components"] = False
            msgs.append(f"curve {i} is a singular conic")
    if len(set(c.normalized() for c in G.curves)) != len(G.curves):
        checks["smooth_components"] = False
        msgs.append("repeated curve")
    ok = all(checks.values())
    return Report("geometry", PASS if ok else FAIL, {"checks": checks, "t_recomputed": t}, msgs)


# -- construction ------------------------------------------------------------------

def points_from_lines(lines: Sequence[HomogeneousPolynomial]) -> list[IncidencePoint]:
    """Singular locus of a line arrangement from pairwise intersections."""
    found: dict[ProjectivePoint, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            try:
                p = point_from_two_lines(lines[i], lines[j])
            except DegenerateInputError:
                raise ArrangementError(f"lines {i} and {j} coincide") from None
            found.setdefault(p, set()).update((i, j))
    pts = []
    for p in found:
        inc = tuple(n for n, L in enumerate(lines) if not evaluate(L, p))
        pts.append(IncidencePoint(p, inc))
    pts.sort(key=lambda ip: (-ip.multiplicity, ip.incident, ip.point.sort_key()))
    return pts


def line_arrangement(lines: Sequence[HomogeneousPolynomial], name: str = "", ctx: FieldContext | None = None,
                     allow_tk: bool = False) -> GeometricArrangement:
    ctx = ctx or lines[0].ctx
    pts = points_from_lines(lines)
    return GeometricArrangement(k=len(lines), d=1, t=tvector_from_points(pts), name=name,
                                curves=list(lines), points=pts, ctx=ctx, allow_tk=allow_tk)


def curve_arrangement(curves: Sequence[HomogeneousPolynomial], points: Sequence[ProjectivePoint],
                      name: str = "", ctx: FieldContext | None = None) -> GeometricArrangement:
    """Arrangement with a supplied singular locus; incidences are read off by evaluation."""
    ctx = ctx or curves[0].ctx
    ips = []
    for p in points:
        inc = tuple(i for i, C in enumerate(curves) if not evaluate(C, p))
        ips.append(IncidencePoint(p, inc))
    return GeometricArrangement(k=len(curves), d=curves[0].degree, t=tvector_from_points(ips), name=name,
                                curves=list(curves), points=ips, ctx=ctx)
