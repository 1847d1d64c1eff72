"""Exact coefficient arithmetic: rationals and simple number fields Q(alpha).

Rationals are ``fractions.Fraction``.  A number field is described by the
monic minimal polynomial of its generator; elements are coordinate vectors
in the power basis 1, alpha, ..., alpha^(d-1).  Degree 1 represents Q itself.
"""

from __future__ import annotations

import math
from fractions import Fraction


class FieldError(ValueError):
    pass


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of the polynomial with the given coefficients
    (index = exponent, any degree, not all zero)."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        raise FieldError("zero polynomial has every root")
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    # strip trailing ... leading x^0 zeros: x=0 root
    roots = []
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.append(Fraction(0))
        ints = ints[shift:]
    if len(ints) == 1:
        return roots
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if x is not a square."""
    if x < 0:
        return None
    pn = math.isqrt(x.numerator)
    pd = math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _quartic_is_reducible(c: list[Fraction]) -> bool:
    """Reducibility over Q of a monic quartic with no rational roots.

    Checks for a split into two rational quadratics via the resolvent cubic.
    """
    a, b, cc, d = c[3], c[2], c[1], c[0]
    # resolvent cubic for (x^2+px+q)(x^2+rx+s)
    res = [-(a * a * d - 4 * b * d + cc * cc), a * cc - 4 * d, -b, Fraction(1)]
    for y in _rational_roots(list(res)):
        p2 = a * a - 4 * b + 4 * y
        p = rational_sqrt(p2)
        if p is None:
            continue
        for sign in (1, -1):
            pp = sign * p
            rr = a - pp
            # q + s = y, ps + qr = cc
            if pp != rr:
                q = (pp * y - cc) / (pp - rr)
                s = y - q
            else:
                disc = rational_sqrt(y * y - 4 * d)
                if disc is None:
                    continue
                q, s = (y + disc) / 2, (y - disc) / 2
            if q * s == d and q + s + pp * rr == b and pp * s + q * rr == cc:
                return True
    return False


class NumberField:
    """Q(alpha) with alpha a root of a monic minimal polynomial over Q.

    ``minimal_poly`` is the coefficient tuple (index = exponent, monic,
    length d+1).  Irreducibility is verified for degree <= 4; larger degrees
    are accepted on the user's word.
    """

    def __init__(self, generator_name: str, minimal_poly: tuple[Fraction, ...]):
        if len(minimal_poly) < 2 or minimal_poly[-1] != 1:
            raise FieldError("minimal polynomial must be monic of degree >= 1")
        self.generator_name = generator_name
        self.minimal_poly = tuple(Fraction(c) for c in minimal_poly)
        self.degree = len(minimal_poly) - 1
        self._check_irreducible()
        # power-basis expansions of alpha^d .. alpha^(2d-2)
        self._high_powers = self._reduction_table()

    def _check_irreducible(self) -> None:
        d = self.degree
        if d == 1:
            return
        if d <= 4 and _rational_roots(list(self.minimal_poly)):
            raise FieldError("minimal polynomial has a rational root")
        if d == 4 and _quartic_is_reducible(list(self.minimal_poly)):
            raise FieldError("minimal polynomial splits into two quadratics")
        # d > 4: asserted by the user

    def _reduction_table(self) -> list[tuple[Fraction, ...]]:
        d = self.degree
        table = []
        # alpha^d = -(c_0 + c_1 alpha + ...)
        cur = [-c for c in self.minimal_poly[:d]]
        table.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [Fraction(0)] + cur[: d - 1]
            top = cur[d - 1]
            if top:
                for i in range(d):
                    nxt[i] -= top * self.minimal_poly[i]
            cur = nxt
            table.append(tuple(cur))
        return table

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NumberField)
            and self.generator_name == other.generator_name
            and self.minimal_poly == other.minimal_poly
        )

    def __hash__(self):
        return hash((self.generator_name, self.minimal_poly))

    def __repr__(self):
        if self.degree == 1:
            return "Q"
        return f"Q({self.generator_name})"

    # -- element constructors -------------------------------------------------

    def zero(self) -> FieldElem:
        return FieldElem(self, (Fraction(0),) * self.degree)

    def one(self) -> FieldElem:
        return self.from_rational(Fraction(1))

    def from_rational(self, q) -> FieldElem:
        coords = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return FieldElem(self, tuple(coords))

    def generator(self) -> FieldElem:
        if self.degree == 1:
            raise FieldError("Q has no generator element")
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return FieldElem(self, tuple(coords))


class FieldElem:
    """An element of a NumberField, as power-basis coordinates."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != field.degree:
            raise FieldError("coordinate vector has wrong length")
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        if d == 1:
            return FieldElem(self.field, (self.coeffs[0] * o.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                red = self.field._high_powers[k - d]
                for i in range(d):
                    out[i] += c * red[i]
        return FieldElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        d = self.field.degree
        if d == 1:
            return FieldElem(self.field, (1 / self.coeffs[0],))
        # extended Euclid in Q[x]: s*self + t*minpoly = gcd = const
        r0 = list(self.field.minimal_poly)
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while deg(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if deg(r1) != 0:
            raise FieldError("minimal polynomial is not irreducible")
        c = r1[deg(r1)]
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (d - len(inv))
        return FieldElem(self.field, tuple(inv[:d]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (
            isinstance(other, FieldElem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return format_field_elem(self)


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = max(i for i, c in enumerate(b) if c)
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] / b[db]
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return q, a


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def format_field_elem(x: FieldElem) -> str:
    """Canonical printing, e.g. ``1/2 + 3*i`` or ``-zeta3^2``."""
    g = x.field.generator_name
    parts = []
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mon = g if i == 1 else f"{g}^{i}"
        if c == 1:
            parts.append(mon)
        elif c == -1:
            parts.append(f"-{mon}")
        else:
            parts.append(f"{c}*{mon}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def sqrt_in_field(field: NumberField, x: FieldElem) -> FieldElem | None:
    """A square root of x in the field, or None.

    Complete for degree <= 2; degree-1 fields reduce to the rational test.
    """
    if x.field != field:
        raise FieldError("element of a different field")
    if field.degree == 1:
        r = rational_sqrt(x.coeffs[0])
        return None if r is None else field.from_rational(r)
    if field.degree != 2:
        return None  # unsupported; caller falls back to overrides
    # alpha^2 = -c1*alpha - c0
    c0, c1 = field.minimal_poly[0], field.minimal_poly[1]
    d0, d1 = x.coeffs
    # (a + b*alpha)^2 = (a^2 - c0 b^2) + (2ab - c1 b^2) alpha
    r = rational_sqrt(d0)
    if d1 == 0 and r is not None:
        return field.from_rational(r)
    # b != 0: (c1^2 - 4 c0) B^2 + (2 c1 d1 - 4 d0) B + d1^2 = 0 with B = b^2
    A = c1 * c1 - 4 * c0
    Bc = 2 * c1 * d1 - 4 * d0
    C = d1 * d1
    disc = rational_sqrt(Bc * Bc - 4 * A * C)
    if disc is None:
        return None
    for B in ((-Bc + disc) / (2 * A), (-Bc - disc) / (2 * A)):
        if B <= 0:
            continue
        b = rational_sqrt(B)
        if b is None:
            continue
        a = (d1 + c1 * B) / (2 * b)
        cand = FieldElem(field, (a, b))
        if cand * cand == x:
            return cand
    return None


def quadratic_roots(field: NumberField, p: FieldElem, q: FieldElem) -> list[FieldElem]:
    """Roots in the field of x^2 + p x + q."""
    disc = p * p - 4 * q
    s = sqrt_in_field(field, disc)
    if s is None:
        return []
    half = Fraction(1, 2)
    r1 = (-p + s) * half
    r2 = (-p - s) * half
    return [r1] if r1 == r2 else [r1, r2]


# -- field descriptors --------------------------------------------------------

QQ = NumberField("a", (Fraction(0), Fraction(1)))  # x, degree 1: Q itself

_BUILTIN = {
    "Q": lambda: QQ,
    "Q(i)": lambda: NumberField("i", (Fraction(1), Fraction(0), Fraction(1))),
    "Q(zeta3)": lambda: NumberField(
        "zeta3", (Fraction(1), Fraction(1), Fraction(1))
    ),
}


def parse_field(descriptor: str) -> NumberField:
    """Parse 'Q', 'Q(i)', 'Q(zeta3)' or 'Q[a]/(<monic poly in a>)'."""
    descriptor = descriptor.strip()
    if descriptor in _BUILTIN:
        return _BUILTIN[descriptor]()
    if descriptor.startswith("Q[") and "]/(" in descriptor and descriptor.endswith(")"):
        gen = descriptor[2 : descriptor.index("]")].strip()
        body = descriptor[descriptor.index("]/(") + 3 : -1]
        from .parser import parse_univariate_rational

        coeffs = parse_univariate_rational(body, gen)
        return NumberField(gen, tuple(coeffs))
    raise FieldError(f"unsupported field descriptor: {descriptor!r}")
