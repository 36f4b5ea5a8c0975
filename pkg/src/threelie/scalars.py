"""Exact scalars: rationals, optionally extended by one fixed square root.

Everything downstream assumes exact field arithmetic, no rounding anywhere.
Plain values are fractions.Fraction.  A computation that needs sqrt(d) for a
square-free integer d opens quadratic_session(d) and works with Quad values
a + b*sqrt(d).  One discriminant per session; towers are rejected.
"""

from __future__ import annotations

import re
from contextlib import contextmanager
from fractions import Fraction

_ACTIVE_DISC: int | None = None


def _factor_square(n: int) -> tuple[int, int]:
    # n = m*m*d with d square-free.  Trial division; weights stay small.
    if n <= 0:
        raise ValueError("positive integer expected")
    m, d = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        m *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    return m, d * n


def squarefree_part(x) -> int:
    """Square-free d with x = (rational)^2 * d, for nonzero rational x."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no square-free part")
    n = x.numerator * x.denominator
    _, d = _factor_square(abs(n))
    return -d if n < 0 else d


def active_discriminant() -> int | None:
    return _ACTIVE_DISC


@contextmanager
def quadratic_session(d: int):
    """Work inside Q(sqrt(d)).  d must be square-free and not 0 or 1."""
    global _ACTIVE_DISC
    if d in (0, 1):
        raise ValueError("discriminant must not be 0 or 1")
    if _factor_square(abs(d))[0] != 1:
        raise ValueError(f"discriminant {d} is not square-free")
    if _ACTIVE_DISC is not None and _ACTIVE_DISC != d:
        raise ValueError(
            f"quadratic session for {_ACTIVE_DISC} is already active"
        )
    prev = _ACTIVE_DISC
    _ACTIVE_DISC = d
    try:
        yield
    finally:
        _ACTIVE_DISC = prev


class Quad:
    """a + b*sqrt(d) with exact rational a, b and square-free d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int | None = None):
        if d is None:
            d = _ACTIVE_DISC
            if d is None:
                raise ValueError("no quadratic session is active")
        elif d in (0, 1) or _factor_square(abs(d))[0] != 1:
            raise ValueError(f"bad discriminant {d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Quad is immutable")

    def _align(self, other):
        # The shared discriminant is whichever side has a live root part.
        if isinstance(other, Quad):
            if self.b and other.b and self.d != other.d:
                raise ValueError(f"mixed discriminants {self.d}, {other.d}")
            d = self.d if self.b else (other.d if other.b else self.d)
            return other.a, other.b, d
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0), self.d
        return None

    def __add__(self, other):
        o = self._align(other)
        if o is None:
            return NotImplemented
        oa, ob, d = o
        return Quad(self.a + oa, self.b + ob, d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._align(other)
        if o is None:
            return NotImplemented
        oa, ob, d = o
        return Quad(self.a - oa, self.b - ob, d)

    def __rsub__(self, other):
        o = self._align(other)
        if o is None:
            return NotImplemented
        oa, ob, d = o
        return Quad(oa - self.a, ob - self.b, d)

    def __mul__(self, other):
        o = self._align(other)
        if o is None:
            return NotImplemented
        oa, ob, d = o
        return Quad(
            self.a * oa + self.b * ob * d,
            self.a * ob + self.b * oa,
            d,
        )

    __rmul__ = __mul__

    def _inverse(self):
        # (a + b sqrt d)(a - b sqrt d) = a^2 - b^2 d, nonzero since d is
        # square-free (so never a rational square).
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Quad(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quad(other, 0, self.d)
        if not isinstance(other, Quad):
            return NotImplemented
        return self * other._inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Quad(other, 0, self.d)
        if not isinstance(other, Quad):
            return NotImplemented
        return other * self._inverse()

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, Quad):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"Quad({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def as_fraction(x) -> Fraction:
    """Collapse to a plain rational; error if a root genuinely remains."""
    if isinstance(x, Quad):
        if x.b != 0:
            raise ValueError(f"{format_scalar(x)} is irrational")
        return x.a
    return Fraction(x)


def scalar_sqrt(x):
    """Exact square root.  Rational when possible, else a session Quad."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    n = x.numerator * x.denominator
    m, d = _factor_square(abs(n))
    if n < 0:
        d = -d
    if d == 1:
        return Fraction(m, x.denominator)
    if _ACTIVE_DISC is None:
        raise ValueError(f"sqrt({x}) needs quadratic_session({d})")
    if _ACTIVE_DISC != d:
        raise ValueError(
            f"sqrt({x}) needs discriminant {d}, session has {_ACTIVE_DISC}"
        )
    return Quad(0, Fraction(m, x.denominator), d)


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(x) -> str:
    """Canonical string: "p", "p/q", or "p/q+r/s*sqrt(d)" (sign folded in)."""
    if isinstance(x, (int, Fraction)):
        return _format_fraction(Fraction(x))
    if isinstance(x, Quad):
        if x.b == 0:
            return _format_fraction(x.a)
        mag = abs(x.b)
        root = f"sqrt({x.d})" if mag == 1 else f"{_format_fraction(mag)}*sqrt({x.d})"
        sign = "-" if x.b < 0 else "+"
        if x.a == 0:
            return root if x.b > 0 else "-" + root
        return f"{_format_fraction(x.a)}{sign}{root}"
    raise TypeError(f"not a scalar: {x!r}")


_SCALAR_RE = re.compile(
    r"^(?:(?P<head>[+-]?\d+(?:/\d+)?)(?P<sign>[+-]))?"
    r"(?P<rsign>[+-]?)(?:(?P<coef>\d+(?:/\d+)?)\*)?sqrt\((?P<disc>-?\d+)\)$"
)


def parse_scalar(s: str):
    """Inverse of format_scalar.  Quadratic strings carry their own d."""
    s = s.strip()
    if "sqrt" not in s:
        return Fraction(s)
    m = _SCALAR_RE.match(s)
    if m is None or (m.group("sign") and m.group("rsign")):
        raise ValueError(f"bad scalar string: {s!r}")
    head = Fraction(m.group("head")) if m.group("head") else Fraction(0)
    coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
    if "-" in (m.group("sign"), m.group("rsign")):
        coef = -coef
    return Quad(head, coef, int(m.group("disc")))
