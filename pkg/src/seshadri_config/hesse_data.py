"""Singular locus of the Hesse arrangement of twelve conics.

Each of the 21 points is cut out by two linear forms with coefficients in
Q[u]/(u^6 + 9u^4 - 4u^3 + 27u^2 + 36u + 31).  The forms are kept in the
original computer-algebra notation (``u5`` means u^5) and parsed on load.
"""

from __future__ import annotations

import re

from .field import FieldContext, FieldElement, make_field_context
from .geometry import HomogeneousPolynomial, ProjectivePoint, point_from_two_lines

HESSE_MINPOLY = [31, 36, 27, -4, 9, 0, 1]

_A = "(-4u5+u4-40u3+26u2-92u-91)"
_B = "(4u5-u4+40u3-26u2+182u+181)"
_C = "(-4u5+u4-40u3+26u2-182u-1)"

POINT_IDEALS: list[tuple[str, str]] = [
    (f"90*y+{_A}*z", "x-z"),
    ("36*y+(u5-u4+10u3-20u2+29u-11)*z", "10*x+(-u2+2u+11)*y+(-4u2-4u-6)*z"),
    ("60*y+(u5+u4+10u3+16u2+13u+79)*z", "6*x+(u2+2u-11)*y+(-4u2+4u-10)*z"),
    ("90*y+(u5-4u4+10u3-29u2+53u-11)*z", "x-y"),
    ("60*y+(u5+u4+5u3+u2-2u+44)*z", "6*x+(-4u2+4u-10)*y+(u2+2u-11)*z"),
    ("36*y+(-u5+u4-7u3+11u2-20u-22)*z", "10*x+(-4u2-4u-6)*y+(-u2+2u+11)*z"),
    ("y-z", f"90*x+{_A}*z"),
    (f"180*y+{_B}*z", "x+(-u-1)*y+(-u+1)*z"),
    (f"180*y+{_C}*z", "x+(-u+1)*y+(-u-1)*z"),
    ("z", "x"),
    ("y", "x"),
    ("z", "y"),
    ("y-z", "x-z"),
    (f"180*y+{_B}*z", f"180*x+{_C}*z"),
    (f"180*y+{_C}*z", f"180*x+{_B}*z"),
    (f"180*y+{_B}*z", "x-z"),
    (f"180*y+{_C}*z", f"180*x+{_C}*z"),
    ("y-z", f"180*x+{_B}*z"),
    (f"180*y+{_C}*z", "x-z"),
    ("y-z", f"180*x+{_C}*z"),
    (f"180*y+{_B}*z", f"180*x+{_B}*z"),
]

# first nine are the 8-fold points, the rest the nodes
EIGHTFOLD = tuple(range(9))
NODES = tuple(range(9, 21))

_TERM = re.compile(r"([+-]?)(?:(\d+)\*|(\([^()]*\))\*)?([xyz])")
_UTERM = re.compile(r"([+-]?)(\d*)(u(\d*))?")


def parse_u_poly(text: str, ctx: FieldContext) -> FieldElement:
    """Parse e.g. ``-4u5+u4-40u3+26u2-92u-91``."""
    s = text.strip().strip("()")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _UTERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, digits, upart, power = m.groups()
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0 if not upart else (int(power) if power else 1)
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
    top = max(coeffs)
    return ctx.from_poly([coeffs.get(i, 0) for i in range(top + 1)])


def parse_linear_form(text: str, ctx: FieldContext) -> HomogeneousPolynomial:
    s = text.replace(" ", "")
    coeffs = {"x": ctx.zero(), "y": ctx.zero(), "z": ctx.zero()}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse linear form {text!r} at {pos}")
        sign, digits, paren, var = m.groups()
        if paren:
            c = parse_u_poly(paren, ctx)
        else:
            c = ctx(int(digits) if digits else 1)
        if sign == "-":
            c = -c
        coeffs[var] = coeffs[var] + c
        pos = m.end()
    return HomogeneousPolynomial.linear(coeffs["x"], coeffs["y"], coeffs["z"], ctx)


def hesse_context() -> FieldContext:
    return make_field_context(HESSE_MINPOLY)


def hesse_points(ctx: FieldContext | None = None) -> list[ProjectivePoint]:
    """The 21 singular points, each as the meet of its two linear forms."""
    ctx = ctx or hesse_context()
    return [point_from_two_lines(parse_linear_form(a, ctx), parse_linear_form(b, ctx))
            for a, b in POINT_IDEALS]
