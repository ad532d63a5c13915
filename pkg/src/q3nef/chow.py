"""Chow rings of the quadric threefold and the quadric surface.

A*(Q3) is free on 1, h, l, pt with h*h = 2l, h*l = pt and everything else
in degree > 3 vanishing.  A*(Q2) = A*(P1 x P1) is free on 1, A, B, pt where
A = c1(O(1,0)), B = c1(O(0,1)), A*B = pt and A*A = B*B = 0.

Coefficients are ints or Fractions; the point class is identified with its
degree, so ``deg3`` / ``deg2`` just read off the top coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _is_scalar(x) -> bool:
    return type(x) in (int, Fraction) or isinstance(x, Rational)


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class _Graded:
    """Shared ring plumbing for the two fixed-basis Chow rings."""

    __slots__ = ()
    _fields: tuple[str, ...] = ()

    def coeffs(self) -> tuple:
        return tuple(getattr(self, f) for f in self._fields)

    @classmethod
    def _make(cls, values):
        return cls(*[_norm(v) for v in values])

    def __add__(self, other):
        if _is_scalar(other):
            other = type(self).scalar(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._make(a + b for a, b in zip(self.coeffs(), other.coeffs()))

    __radd__ = __add__

    def __neg__(self):
        return self._make(-a for a in self.coeffs())

    def __sub__(self, other):
        if _is_scalar(other):
            other = type(self).scalar(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return self._make(a * other for a in self.coeffs())
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._product(other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self._make(a * other for a in self.coeffs())
        return NotImplemented

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self._make(Fraction(a) / other for a in self.coeffs())

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        out = type(self).scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def is_integral(self) -> bool:
        return all(Fraction(a).denominator == 1 for a in self.coeffs())

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs())


@dataclass(frozen=True)
class ChowClass3(_Graded):
    a0: int | Fraction = 0
    a1: int | Fraction = 0
    a2: int | Fraction = 0
    a3: int | Fraction = 0

    _fields = ("a0", "a1", "a2", "a3")

    def coeffs(self) -> tuple:
        return (self.a0, self.a1, self.a2, self.a3)

    @classmethod
    def scalar(cls, c) -> ChowClass3:
        return cls(_norm(c), 0, 0, 0)

    def _product(self, y: ChowClass3) -> ChowClass3:
        x = self
        return self._make((
            x.a0 * y.a0,
            x.a0 * y.a1 + x.a1 * y.a0,
            x.a0 * y.a2 + x.a2 * y.a0 + 2 * x.a1 * y.a1,
            x.a0 * y.a3 + x.a3 * y.a0 + x.a1 * y.a2 + x.a2 * y.a1,
        ))

    def part(self, k: int) -> ChowClass3:
        """Degree-k homogeneous piece."""
        vals = [0, 0, 0, 0]
        vals[k] = self.coeffs()[k]
        return ChowClass3(*vals)

    def __str__(self) -> str:
        return _format(self.coeffs(), ("", "h", "l", "pt"))


@dataclass(frozen=True)
class ChowClass2(_Graded):
    b0: int | Fraction = 0
    b10: int | Fraction = 0
    b01: int | Fraction = 0
    b2: int | Fraction = 0

    _fields = ("b0", "b10", "b01", "b2")

    def coeffs(self) -> tuple:
        return (self.b0, self.b10, self.b01, self.b2)

    @classmethod
    def scalar(cls, c) -> ChowClass2:
        return cls(_norm(c), 0, 0, 0)

    def _product(self, y: ChowClass2) -> ChowClass2:
        x = self
        return self._make((
            x.b0 * y.b0,
            x.b0 * y.b10 + x.b10 * y.b0,
            x.b0 * y.b01 + x.b01 * y.b0,
            x.b0 * y.b2 + x.b2 * y.b0 + x.b10 * y.b01 + x.b01 * y.b10,
        ))

    def part(self, k: int) -> ChowClass2:
        c = self.coeffs()
        if k == 0:
            return ChowClass2(c[0], 0, 0, 0)
        if k == 1:
            return ChowClass2(0, c[1], c[2], 0)
        if k == 2:
            return ChowClass2(0, 0, 0, c[3])
        return ChowClass2()

    @property
    def bidegree(self) -> tuple:
        return (self.b10, self.b01)

    def __str__(self) -> str:
        return _format(self.coeffs(), ("", "A", "B", "pt"))


def _format(coeffs, names) -> str:
    parts = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        if name and c == 1:
            s = name
        elif name and c == -1:
            s = "-" + name
        elif name:
            s = f"{c}{name}" if Fraction(c).denominator == 1 else f"({c}){name}"
        else:
            s = str(c)
        parts.append(s)
    if not parts:
        return "0"
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


ONE = ChowClass3(1)
H = ChowClass3(0, 1)
L = ChowClass3(0, 0, 1)
PT = ChowClass3(0, 0, 0, 1)

ONE2 = ChowClass2(1)
A = ChowClass2(0, 1, 0, 0)
B = ChowClass2(0, 0, 1, 0)
PT2 = ChowClass2(0, 0, 0, 1)


def mul3(x: ChowClass3, y: ChowClass3) -> ChowClass3:
    return x * y


def mul2(x: ChowClass2, y: ChowClass2) -> ChowClass2:
    return x * y


def deg3(x: ChowClass3):
    return x.a3


def pair3(x: ChowClass3, y: ChowClass3):
    """deg(x * y) without forming the product."""
    return x.a0 * y.a3 + x.a3 * y.a0 + x.a1 * y.a2 + x.a2 * y.a1


def deg2(x: ChowClass2):
    return x.b2


def inverse(x):
    """Inverse of a class with nonzero constant term (the rest is nilpotent)."""
    c0 = Fraction(x.coeffs()[0])
    if c0 == 0:
        raise ZeroDivisionError(f"class {x} is not a unit")
    u = x / c0
    n = ONE if isinstance(x, ChowClass3) else ONE2
    nil = n - u
    out, p = n, n
    for _ in range(3):
        p = p * nil
        out = out + p
    return out / c0


def exp(x):
    """exp of a class with zero constant term, truncated at the top degree."""
    if x.coeffs()[0] != 0:
        raise ValueError("exp needs a nilpotent argument")
    n = ONE if isinstance(x, ChowClass3) else ONE2
    out, p = n, n
    for k in range(1, 4):
        p = p * x / k
        out = out + p
    return out


def line3(t: int) -> ChowClass3:
    return ChowClass3(0, t)


def line2(a: int, b: int) -> ChowClass2:
    return ChowClass2(0, a, b, 0)
