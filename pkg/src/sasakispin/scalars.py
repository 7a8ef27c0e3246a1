"""Exact arithmetic in the field Q(i, sqrt(2)).

Every quantity in this package (form coefficients, spinor components,
connection coefficients) lives in the degree-4 extension Q(i, sqrt2) of the
rationals, stored as four gmpy2 rationals::

    z = a + b*i + c*sqrt2 + d*i*sqrt2.

Addition/multiplication are componentwise polynomial arithmetic modulo
i^2 = -1, sqrt2^2 = 2; division goes through the two conjugations
(i -> -i, then sqrt2 -> -sqrt2) to rationalize the denominator.
"""
from __future__ import annotations

import math
import re

from gmpy2 import mpq

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational(value) -> mpq:
    """Coerce an int, mpq, or 'p/q' string to an exact rational."""
    if isinstance(value, str):
        if not _RAT_RE.match(value.strip()):
            raise ValueError(f"not a rational literal: {value!r}")
        return mpq(value.strip())
    if isinstance(value, float):
        raise TypeError("refusing to coerce a float to an exact rational")
    return mpq(value)


def rational_sqrt(q) -> mpq | None:
    """Exact square root of a rational, or None if q is not a perfect square."""
    q = mpq(q)
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return mpq(rn, rd)


class Scalar:
    """An element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2)."""

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self._a = mpq(a)
        self._b = mpq(b)
        self._c = mpq(c)
        self._d = mpq(d)

    @property
    def a(self) -> mpq:
        return self._a

    @property
    def b(self) -> mpq:
        return self._b

    @property
    def c(self) -> mpq:
        return self._c

    @property
    def d(self) -> mpq:
        return self._d

    @classmethod
    def from_rational(cls, q) -> Scalar:
        return cls(rational(q))

    @classmethod
    def i(cls) -> Scalar:
        return cls(0, 1)

    @classmethod
    def sqrt2(cls) -> Scalar:
        return cls(0, 0, 1)

    def __add__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self._a + other._a, self._b + other._b,
                      self._c + other._c, self._d + other._d)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self._a - other._a, self._b - other._b,
                      self._c - other._c, self._d - other._d)

    def __rsub__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> Scalar:
        return Scalar(-self._a, -self._b, -self._c, -self._d)

    def __mul__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = other._a, other._b, other._c, other._d
        # (a1 + b1 i + c1 r + d1 ir)(a2 + b2 i + c2 r + d2 ir), r^2 = 2
        return Scalar(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> Scalar:
        """Complex conjugation i -> -i (fixing sqrt2)."""
        return Scalar(self._a, -self._b, self._c, -self._d)

    def sqrt2_conjugate(self) -> Scalar:
        """Galois conjugation sqrt2 -> -sqrt2 (fixing i)."""
        return Scalar(self._a, self._b, -self._c, -self._d)

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        # z * conj(z) lies in Q(sqrt2); multiply by its sqrt2-conjugate to
        # land in Q, then divide by the resulting rational norm.
        w = self * self.conjugate()
        u, v = w._a, w._c
        norm = u * u - 2 * v * v  # = w * sqrt2_conjugate(w), a rational
        return self.conjugate() * w.sqrt2_conjugate() * Scalar(1 / norm)

    def norm_squared(self) -> Scalar:
        """|z|^2 = z * conj(z); real, i.e. lies in Q(sqrt2)."""
        return self * self.conjugate()

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_rational(self) -> bool:
        return not (self._b or self._c or self._d)

    def is_real(self) -> bool:
        return not (self._b or self._d)

    def rational_value(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"not a rational: {self}")
        return self._a

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self._a == other._a and self._b == other._b
                and self._c == other._c and self._d == other._d)

    def __hash__(self):
        return hash((self._a, self._b, self._c, self._d))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def serialize(self) -> str:
        return f"({self._a}) + ({self._b})i + ({self._c})r2 + ({self._d})ir2"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        m = re.match(
            r"^\(([^()]*)\) \+ \(([^()]*)\)i \+ \(([^()]*)\)r2 \+ \(([^()]*)\)ir2$",
            text.strip())
        if not m:
            raise ValueError(f"not a serialized scalar: {text!r}")
        return cls(*(rational(g) for g in m.groups()))

    def __str__(self) -> str:
        parts = []
        for coeff, unit in ((self._a, ""), (self._b, "i"),
                            (self._c, "r2"), (self._d, "i*r2")):
            if not coeff:
                continue
            if unit and coeff == 1:
                text = unit
            elif unit and coeff == -1:
                text = f"-{unit}"
            elif unit:
                text = f"{coeff}*{unit}"
            else:
                text = str(coeff)
            parts.append(text)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"Scalar({self._a!r}, {self._b!r}, {self._c!r}, {self._d!r})"


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, mpq)):
        return Scalar(value)
    return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar.i()
SQRT2 = Scalar.sqrt2()
HALF_SQRT2 = Scalar(0, 0, mpq(1, 2), 0)  # 1/sqrt2
