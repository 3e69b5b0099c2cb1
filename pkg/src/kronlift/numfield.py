"""Exact arithmetic in a real number field ``K = Q(alpha)``.

A field is fixed by a monic integer polynomial together with a rational
interval isolating one real root.  Elements are coefficient vectors in the
power basis ``1, alpha, ..., alpha^(D-1)``.

>>> K = make_field([-2, 0, 1], (1, Fraction(3, 2)))
>>> a = K.gen()
>>> a * a
FieldElement(2)
>>> (1 + a).inverse()
FieldElement(-1 + 1*a)
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonMonic,
    NoRealRootIsolated,
    ReducibleMinimalPolynomial,
)

__all__ = [
    "Fraction",
    "NumberField",
    "FieldElement",
    "make_field",
    "add",
    "neg",
    "mul",
    "invert",
    "approx",
    "rational_part",
    "is_rational",
    "parse_rational",
    "format_rational",
    "QQ",
]


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions and ``"p/q"`` strings; reject floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class NumberField:
    minpoly: tuple[int, ...]
    root_interval: tuple[Fraction, Fraction]
    _zero: "FieldElement" = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_zero", FieldElement(self, (Fraction(0),) * self.degree))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def zero(self) -> "FieldElement":
        return self._zero

    def one(self) -> "FieldElement":
        return self.rational(1)

    def gen(self) -> "FieldElement":
        """The primitive element alpha (equals the rational root when D = 1)."""
        if self.degree == 1:
            return self.rational(-self.minpoly[0])
        return self.element([0, 1])

    def rational(self, q) -> "FieldElement":
        q = Fraction(q)
        return FieldElement(self, (q,) + (Fraction(0),) * (self.degree - 1))

    def element(self, coeffs) -> "FieldElement":
        """Element from power-basis coefficients (shorter lists are zero padded)."""
        coeffs = [parse_rational(c) for c in coeffs]
        if len(coeffs) > self.degree:
            if any(coeffs[self.degree:]):
                raise ValueError(
                    f"{len(coeffs)} coefficients given for a degree-{self.degree} field"
                )
            coeffs = coeffs[: self.degree]
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            return self.element(value)
        return self.rational(parse_rational(value))

    def to_json(self) -> dict:
        return {
            "minpoly": list(self.minpoly),
            "root_interval": [format_rational(q) for q in self.root_interval],
        }


def make_field(minpoly, root_interval) -> NumberField:
    """Build ``K = Q(alpha)`` from a monic integer polynomial and a bracket.

    ``minpoly`` lists coefficients from the constant term upwards.  The
    polynomial must change sign strictly across ``root_interval``.
    Irreducibility is not checked; a reducible polynomial surfaces later as
    :class:`ReducibleMinimalPolynomial` when a zero divisor is inverted.
    """
    coeffs = tuple(int(c) for c in minpoly)
    if len(coeffs) < 2:
        raise NonMonic("minimal polynomial must have degree at least 1")
    if coeffs[-1] != 1:
        raise NonMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
    lo, hi = (parse_rational(q) for q in root_interval)
    if not lo < hi:
        raise NoRealRootIsolated(f"empty interval [{lo}, {hi}]")
    if _poly_eval(coeffs, lo) * _poly_eval(coeffs, hi) >= 0:
        raise NoRealRootIsolated(
            f"minimal polynomial does not change sign on [{lo}, {hi}]"
        )
    return NumberField(coeffs, (lo, hi))


class FieldElement:
    """Immutable element of a :class:`NumberField`."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands live in different number fields")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D = self.field.degree
        if D == 1:
            return FieldElement(self.field, (self.coeffs[0] * other.coeffs[0],))
        a, b = self.coeffs, other.coeffs
        if not any(a[1:]):
            return FieldElement(self.field, tuple(a[0] * y for y in b))
        if not any(b[1:]):
            return FieldElement(self.field, tuple(b[0] * x for x in a))
        prod = [Fraction(0)] * (2 * D - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldElement(self.field, _reduce_mod(prod, self.field.minpoly))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return invert(self)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        out = self.field.one()
        for _ in range(abs(e)):
            out = out * base
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * invert(self)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.field.minpoly, self.coeffs))
        return self._hash

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> Fraction:
        return self.coeffs[0]

    def approx(self, eps) -> tuple[Fraction, Fraction]:
        return approx(self, eps)

    def __float__(self):
        lo, hi = approx(self, Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = format_rational(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*a")
            else:
                terms.append(f"{cs}*a^{i}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _reduce_mod(prod, minpoly):
    """Reduce a coefficient list modulo a monic integer polynomial."""
    D = len(minpoly) - 1
    prod = list(prod)
    for k in range(len(prod) - 1, D - 1, -1):
        c = prod[k]
        if c:
            for i in range(D):
                if minpoly[i]:
                    prod[k - D + i] -= c * minpoly[i]
    return tuple(prod[:D])


def _same_field(x: FieldElement, y: FieldElement):
    if x.field is not y.field and x.field != y.field:
        raise FieldMismatch("operands live in different number fields")


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    _same_field(x, y)
    return x + y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    _same_field(x, y)
    return x * y


# --- polynomial helpers over Q for the inverse -----------------------------

def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a = _trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def invert(x: FieldElement) -> FieldElement:
    """Multiplicative inverse via the extended Euclidean algorithm."""
    if x.is_zero():
        raise DivisionByZero("inverse of zero")
    K = x.field
    if x.is_rational():
        return K.rational(1 / x.coeffs[0])
    # invariant: s * x == r (mod minpoly)
    r0, r1 = [Fraction(c) for c in K.minpoly], _trim(x.coeffs)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            break
    if not r1:
        # gcd(x, minpoly) = r0 has positive degree: x is a zero divisor
        lead = r0[-1]
        factor = [c / lead for c in r0]
        raise ReducibleMinimalPolynomial([format_rational(c) for c in factor])
    c = r1[0]
    inv = [v / c for v in s1]
    if len(inv) > K.degree:
        _, inv = _poly_divmod(inv, [Fraction(v) for v in K.minpoly])
    return K.element(inv)


# --- certified approximation -----------------------------------------------

@lru_cache(maxsize=256)
def _root_bracket(field: NumberField, steps: int) -> tuple[Fraction, Fraction]:
    if steps == 0:
        return field.root_interval
    lo, hi = _root_bracket(field, steps - 1)
    if lo == hi:
        return lo, hi
    p = field.minpoly
    mid = (lo + hi) / 2
    pm = _poly_eval(p, mid)
    if pm == 0:
        return mid, mid
    if (_poly_eval(p, lo) < 0) == (pm < 0):
        return mid, hi
    return lo, mid


def _interval_mul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def approx(x: FieldElement, eps) -> tuple[Fraction, Fraction]:
    """Rational interval of width < eps containing x under the chosen embedding."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x.is_rational():
        q = x.coeffs[0]
        return q, q
    steps = 0
    while True:
        lo, hi = _root_bracket(x.field, steps)
        acc = (Fraction(0), Fraction(0))
        for c in reversed(x.coeffs):
            acc = _interval_mul(acc, (lo, hi))
            acc = (acc[0] + c, acc[1] + c)
        if acc[1] - acc[0] < eps:
            return acc
        steps += 4


def rational_part(x: FieldElement) -> Fraction:
    return x.coeffs[0]


def is_rational(x: FieldElement) -> bool:
    return x.is_rational()


#: The rational numbers, used when a problem carries no coordinates at all.
QQ = make_field([0, 1], (-1, 1))
