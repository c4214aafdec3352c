"""Exact scalars: rationals and elements of number fields Q[u]/(f).

Rationals are plain :class:`fractions.Fraction`.  A number field element is
stored as an integer numerator vector over a common positive denominator,
kept in lowest terms, which is much faster than a vector of Fractions.

The minimal polynomial is trusted: it must be monic, but irreducibility is
not checked.  A reducible modulus shows up as a :class:`ZeroDivisorError`
when some nonzero element turns out to have no inverse.
"""

from __future__ import annotations

import json
import re
import math
from fractions import Fraction
from typing import Iterable, Sequence


class FieldError(ValueError):
    """Base class for scalar-layer errors."""


class InvalidSpecError(FieldError):
    pass


class ContextMismatchError(FieldError):
    pass


class ZeroDivisorError(FieldError, ZeroDivisionError):
    pass


class ParseError(FieldError):
    pass


_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading minus) into a Fraction."""
    if not isinstance(text, str):
        raise ParseError(f"rational must be a string, got {text!r}")
    m = _RATIONAL_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    d = int(m.group(2) or 1)
    if d == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), d)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class NumberFieldSpec:
    """Monic defining polynomial, coefficients c0..cn with cn == 1."""

    __slots__ = ("minpoly",)

    def __init__(self, minpoly: Iterable):
        coeffs = [c if isinstance(c, Fraction) else
                  (parse_rational(c) if isinstance(c, str) else Fraction(c))
                  for c in minpoly]
        if len(coeffs) < 2:
            raise InvalidSpecError("minpoly must have degree >= 1")
        if coeffs[-1] != 1:
            raise InvalidSpecError(f"minpoly must be monic, leading coefficient is {coeffs[-1]}")
        self.minpoly = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def __eq__(self, other):
        return isinstance(other, NumberFieldSpec) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberFieldSpec({[format_rational(c) for c in self.minpoly]})"


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = math.gcd(den, *num)
    if g != 1:
        return tuple(x // g for x in num), den // g
    return tuple(num), den


class FieldContext:
    """Arithmetic context for Q[u]/(minpoly).

    ``table[k]`` (for k = n .. 2n-2) holds u^k reduced modulo the minpoly, as
    an integer vector over the common denominator ``table_den``.
    """

    def __init__(self, spec: NumberFieldSpec, rational: bool = False):
        if not isinstance(spec, NumberFieldSpec):
            spec = NumberFieldSpec(spec)
        self.spec = spec
        self.degree = spec.degree
        # degree-1 context built from the rational marker
        self.is_rational = rational
        n = self.degree
        f = spec.minpoly
        rows: dict[int, list[Fraction]] = {}
        cur = [-c for c in f[:n]]  # u^n
        for k in range(n, 2 * n - 1):
            rows[k] = cur
            # u^{k+1} = u * u^k
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [cur[i] - top * f[i] for i in range(n)]
        self._table_frac = rows
        self._split_cache: dict[tuple[int, int], tuple[int, int]] = {}
        den = 1
        for row in rows.values():
            for c in row:
                den = den * c.denominator // math.gcd(den, c.denominator)
        self.table_den = den
        self.table = {k: tuple(int(c * den) for c in row) for k, row in rows.items()}
        self._zero = FieldElement(self, (0,) * n, 1, _trusted=True)
        self._one = FieldElement(self, (1,) + (0,) * (n - 1), 1, _trusted=True)

    @classmethod
    def rational(cls) -> "FieldContext":
        return _RATIONAL

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, FieldContext) and self.spec == other.spec
                and self.is_rational == other.is_rational)

    def __hash__(self):
        return hash((self.spec, self.is_rational))

    def __repr__(self):
        if self.is_rational:
            return "FieldContext(Q)"
        return f"FieldContext(degree={self.degree}, minpoly={self.spec!r})"

    # -- constructors -------------------------------------------------------
    def zero(self) -> "FieldElement":
        return self._zero

    def one(self) -> "FieldElement":
        return self._one

    def gen(self) -> "FieldElement":
        """The class of u (reduced, so -c0 in a degree-1 context)."""
        if self.degree == 1:
            return self(-self.spec.minpoly[0])
        return self.from_coords([0, 1] + [0] * (self.degree - 2))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        q = Fraction(value)
        return FieldElement(self, (q.numerator,) + (0,) * (self.degree - 1),
                            q.denominator, _trusted=True)

    def from_coords(self, coords: Sequence) -> "FieldElement":
        if len(coords) != self.degree:
            raise ParseError(f"expected {self.degree} coordinates, got {len(coords)}")
        fr = [c if isinstance(c, Fraction) else Fraction(c) for c in coords]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fr]
        return FieldElement(self, num, den)

    def from_poly(self, coeffs: Sequence) -> "FieldElement":
        """Reduce an arbitrary-length polynomial in u (coefficients low to high)."""
        acc = self.zero()
        u = self.gen()
        power = self.one()
        for c in coeffs:
            if c:
                acc = acc + power * Fraction(c)
            power = power * u
        return acc

    def check(self, a: "FieldElement") -> None:
        if a.ctx is not self and a.ctx != self:
            raise ContextMismatchError(f"element of {a.ctx!r} used in {self!r}")

    # -- modular reduction --------------------------------------------------
    def find_split_prime(self, start: int = 1_000_003, skip: int = 0) -> tuple[int, int]:
        """Return ``(p, r)`` with r a simple root of the minpoly modulo the prime p.

        Primes dividing a coefficient denominator are skipped.  ``skip`` picks
        a later prime, so several independent reductions can be produced.
        """
        key = (start, skip)
        if key not in self._split_cache:
            self._split_cache[key] = self._find_split_prime(start, skip)
        return self._split_cache[key]

    def _find_split_prime(self, start: int, skip: int) -> tuple[int, int]:
        import numpy as np

        denoms = [c.denominator for c in self.spec.minpoly]
        p = start
        found = 0
        while True:
            p = _next_prime(p)
            if all(d % p for d in denoms):
                coeffs = [c.numerator * pow(c.denominator, -1, p) % p for c in self.spec.minpoly]
                xs = np.arange(p, dtype=np.int64)
                val = np.zeros(p, dtype=np.int64)
                for c in reversed(coeffs):
                    val = (val * xs + c) % p
                roots = np.nonzero(val == 0)[0]
                for r in roots.tolist():
                    deriv = 0
                    for i in range(len(coeffs) - 1, 0, -1):
                        deriv = (deriv * r + i * coeffs[i]) % p
                    if deriv:
                        if found == skip:
                            return p, r
                        found += 1
                        break
            p += 1


def _next_prime(n: int) -> int:
    from sympy import nextprime
    return int(nextprime(n - 1))


class FieldElement:
    """Immutable element of a :class:`FieldContext`."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: FieldContext, num: Sequence[int], den: int, _trusted: bool = False):
        if not _trusted:
            if den == 0:
                raise ZeroDivisorError("zero denominator")
            num, den = _normalize(num, den)
        self.ctx = ctx
        self.num = tuple(num)
        self.den = den

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatchError(f"cannot combine elements of {self.ctx!r} and {other.ctx!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return FieldElement(self.ctx, [a + b for a, b in zip(self.num, o.num)], self.den)
        return FieldElement(self.ctx, [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                            self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, tuple(-a for a in self.num), self.den, _trusted=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.ctx, [a * q.numerator for a in self.num], self.den * q.denominator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        ctx = self.ctx
        n = ctx.degree
        if n == 1:
            return FieldElement(ctx, (self.num[0] * o.num[0],), self.den * o.den)
        a, b = self.num, o.num
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        high = prod[n:]
        if not any(high):
            return FieldElement(ctx, prod[:n], self.den * o.den)
        td = ctx.table_den
        res = [c * td for c in prod[:n]]
        for k, c in enumerate(high, start=n):
            if c:
                row = ctx.table[k]
                for i in range(n):
                    res[i] += c * row[i]
        return FieldElement(ctx, res, self.den * o.den * td)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisorError("inverse of zero")
        ctx = self.ctx
        if ctx.degree == 1:
            return FieldElement(ctx, (self.den,), self.num[0])
        a = _trim([Fraction(x) for x in self.num])
        f = list(ctx.spec.minpoly)
        # invariant: s*a == r0 (mod f), t*a == r1 (mod f)
        r0, r1 = f, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_polysub(s0, _polymul(q, s1)))
            if len(r1) == 1 and r1[0] == 0:
                break
        if len(r1) == 1 and r1[0] != 0:
            g, s = r1[0], s1
        elif len(r0) == 1 and r0[0] != 0:
            g, s = r0[0], s0
        else:
            raise ZeroDivisorError(f"{self} is a zero divisor: minpoly is reducible")
        inv = ctx.from_poly([c / g for c in s]) * Fraction(self.den)
        return inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisorError("division by zero")
            q = Fraction(other)
            return FieldElement(self.ctx, [a * q.denominator for a in self.num], self.den * q.numerator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return (self.is_rational() and self.num[0] == q.numerator and self.den == q.denominator)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def sort_key(self) -> tuple:
        return self.coords

    def mod_p(self, p: int, root: int) -> int:
        """Image under u -> root in GF(p)."""
        if self.den % p == 0:
            raise ZeroDivisorError(f"denominator {self.den} not invertible mod {p}")
        acc = 0
        for c in reversed(self.num):
            acc = (acc * root + c) % p
        return acc * pow(self.den, -1, p) % p

    def __repr__(self):
        return f"FieldElement({serialize_element(self)})"

    def __str__(self):
        out = ""
        for i, c in enumerate(self.coords):
            if not c and (i or any(self.num[1:])):
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            mag = format_rational(abs(c))
            term = mono if mag == "1" and mono else (f"{mag}*{mono}" if mono else mag)
            out += (" - " if c < 0 else " + ") + term if out else ("-" if c < 0 else "") + term
        return out


_RATIONAL = FieldContext(NumberFieldSpec([0, 1]), rational=True)
QQ = _RATIONAL


def make_field_context(spec) -> FieldContext:
    """Build the arithmetic context for a monic minpoly (a spec or coefficient list)."""
    if not isinstance(spec, NumberFieldSpec):
        spec = NumberFieldSpec(spec)
    return FieldContext(spec)


def field_arithmetic(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.ctx != b.ctx:
        raise ContextMismatchError("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def field_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()


def serialize_element(a: FieldElement) -> str:
    return json.dumps([format_rational(c) for c in a.coords])


def element_to_json(a: FieldElement) -> list[str]:
    return [format_rational(c) for c in a.coords]


def element_from_json(data, ctx: FieldContext) -> FieldElement:
    if not isinstance(data, list):
        raise ParseError(f"element must be a JSON array, got {data!r}")
    if len(data) != ctx.degree:
        raise ParseError(f"element has {len(data)} coordinates, field degree is {ctx.degree}")
    return ctx.from_coords([parse_rational(s) for s in data])


def parse_element(text: str, ctx: FieldContext) -> FieldElement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed element {text!r}: {exc}") from None
    return element_from_json(data, ctx)


def field_to_json(ctx: FieldContext) -> dict:
    if ctx.is_rational:
        return {"type": "rational"}
    return {"type": "number_field", "minpoly": [format_rational(c) for c in ctx.spec.minpoly]}


def field_from_json(data) -> FieldContext:
    if not isinstance(data, dict) or data.get("type") not in ("rational", "number_field"):
        raise ValueError("field must be {'type': 'rational'} or {'type': 'number_field', 'minpoly': [...]}")
    if data["type"] == "rational":
        return QQ
    return make_field_context([parse_rational(c) for c in data["minpoly"]])


# -- univariate helpers over Q, coefficient lists low -> high ----------------

def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p or [Fraction(0)]


def _polysub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydivmod(a, b):
    a = list(_trim(list(a)))
    b = _trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and not (len(a) == 1 and a[0] == 0):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = _trim(a[:-1]) if len(a) > 1 else [Fraction(0)]
    return q, a
