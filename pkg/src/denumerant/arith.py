"""Exact integer/rational primitives.

Python ``int`` is the arbitrary-precision integer and :class:`fractions.Fraction`
the exact rational; nothing in this package ever touches a float.  On top of
those this module provides the few number-theoretic helpers the reduction
needs (extended gcd, a signed modular inverse, the two non-standard
remainders) and :class:`ExpVec`, an exact rational 3-vector of slack-variable
exponents.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

from .errors import InternalError, InvalidInputError

Rational = Union[int, Fraction]

__all__ = [
    "BezoutPair",
    "ExpVec",
    "bezout_unit",
    "exact_div",
    "ext_gcd",
    "mod_inverse_signed",
    "rem_star",
    "srem_star",
]


def _as_int(x, name: str = "value") -> int:
    if isinstance(x, bool):
        raise InvalidInputError(f"{name} must be an integer, got bool")
    try:
        return operator.index(x)
    except TypeError:
        raise InvalidInputError(f"{name} must be an integer, got {type(x).__name__}") from None


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y == g``.

    >>> ext_gcd(5, 0)
    (5, 1, 0)
    >>> g, x, y = ext_gcd(3, 7); (g, 3 * x + 7 * y)
    (1, 1)
    """
    a = _as_int(a, "a")
    b = _as_int(b, "b")
    if a == 0 and b == 0:
        raise InvalidInputError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse_signed(x: int, m: int) -> int:
    """Inverse of ``x`` modulo ``m`` taken in the symmetric range ``(-m/2, m/2]``.

    For ``m == 1`` every residue is congruent, and the value 1 is returned so
    that unit moduli flow through the reductions unchanged.
    """
    x = _as_int(x, "x")
    m = _as_int(m, "m")
    if m < 1:
        raise InvalidInputError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 1
    g, y, _ = ext_gcd(x, m)
    if g != 1:
        raise InvalidInputError(f"{x} is not invertible modulo {m} (gcd {g})")
    y %= m
    if 2 * y > m:
        y -= m
    return y


@dataclass(frozen=True)
class BezoutPair:
    """``a*u + b*v == 1`` with ``v`` the signed inverse of ``b`` modulo ``a``."""

    u: int
    v: int
    a: int
    b: int


def bezout_unit(a: int, b: int) -> BezoutPair:
    a = _as_int(a, "a")
    b = _as_int(b, "b")
    if a < 1 or b < 1:
        raise InvalidInputError(f"bezout_unit needs positive arguments, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise InvalidInputError(f"gcd({a}, {b}) = {gcd(a, b)} != 1")
    v = mod_inverse_signed(b, a)
    u = exact_div(1 - b * v, a)
    return BezoutPair(u=u, v=v, a=a, b=b)


def srem_star(m: int, a: int) -> tuple[int, int]:
    """Signed remainder: ``m == l*a + r`` with ``-a/2 < r <= a/2``.

    >>> srem_star(11, 3)
    (4, -1)
    >>> srem_star(2, 4)
    (0, 2)
    """
    a = _as_int(a, "a")
    if a < 1:
        raise InvalidInputError(f"srem_star needs a >= 1, got {a}")
    ell, r = divmod(_as_int(m, "m"), a)
    if 2 * r > a:
        r -= a
        ell += 1
    return ell, r


def rem_star(m: int, a: int) -> tuple[int, int]:
    """Shifted remainder: ``m == l*a + r`` with ``0 < r <= a`` (never 0).

    >>> rem_star(-25, 3)
    (-9, 2)
    >>> rem_star(6, 3)
    (1, 3)
    """
    a = _as_int(a, "a")
    if a < 1:
        raise InvalidInputError(f"rem_star needs a >= 1, got {a}")
    ell, r = divmod(_as_int(m, "m"), a)
    if r == 0:
        r = a
        ell -= 1
    return ell, r


def exact_div(num: int, den: int) -> int:
    """Integer division that must be exact; anything else is an internal bug."""
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"non-exact division {num} / {den}")
    return q


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not an exponent")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exponents must be int or Fraction, got {type(x).__name__}")


class ExpVec:
    """Exact rational exponent vector ``(e1, e2, e3)`` over the slack variables.

    Stored as three integer numerators over one positive common denominator,
    kept in lowest terms.  Arithmetic therefore stays in machine-friendly
    ``int`` operations even when exponents such as ``-1/2`` appear after a
    multiplier substitution.  Instances are immutable and hashable.
    """

    __slots__ = ("_n1", "_n2", "_n3", "_den")

    def __init__(self, e1: Rational = 0, e2: Rational = 0, e3: Rational = 0):
        f1, f2, f3 = _as_fraction(e1), _as_fraction(e2), _as_fraction(e3)
        den = f1.denominator * f2.denominator // gcd(f1.denominator, f2.denominator)
        den = den * f3.denominator // gcd(den, f3.denominator)
        self._set(
            f1.numerator * (den // f1.denominator),
            f2.numerator * (den // f2.denominator),
            f3.numerator * (den // f3.denominator),
            den,
        )

    def _set(self, n1: int, n2: int, n3: int, den: int) -> None:
        g = gcd(n1, n2, n3, den)
        if g != 1:
            n1, n2, n3, den = n1 // g, n2 // g, n3 // g, den // g
        self._n1, self._n2, self._n3, self._den = n1, n2, n3, den

    @classmethod
    def _raw(cls, n1: int, n2: int, n3: int, den: int) -> "ExpVec":
        obj = cls.__new__(cls)
        if den < 0:
            n1, n2, n3, den = -n1, -n2, -n3, -den
        obj._set(n1, n2, n3, den)
        return obj

    @classmethod
    def unit(cls, i: int) -> "ExpVec":
        """The basis vector for slack variable ``z_{i+1}`` (``i`` in 0..2)."""
        n = [0, 0, 0]
        n[i] = 1
        return cls._raw(n[0], n[1], n[2], 1)

    @classmethod
    def parse(cls, text: str) -> "ExpVec":
        """Inverse of ``str()``: ``"19,-3/2,-1"`` -> ``ExpVec(19, -3/2, -1)``."""
        parts = text.strip().strip("()").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated exponents, got {text!r}")
        return cls(*(Fraction(p.strip()) for p in parts))

    @property
    def e1(self) -> Fraction:
        return Fraction(self._n1, self._den)

    @property
    def e2(self) -> Fraction:
        return Fraction(self._n2, self._den)

    @property
    def e3(self) -> Fraction:
        return Fraction(self._n3, self._den)

    @property
    def denominator(self) -> int:
        return self._den

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.e1, self.e2, self.e3))

    def __len__(self) -> int:
        return 3

    def is_zero(self) -> bool:
        return self._n1 == 0 and self._n2 == 0 and self._n3 == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "ExpVec") -> "ExpVec":
        if not isinstance(other, ExpVec):
            return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return ExpVec._raw(self._n1 + other._n1, self._n2 + other._n2, self._n3 + other._n3, d1)
        return ExpVec._raw(
            self._n1 * d2 + other._n1 * d1,
            self._n2 * d2 + other._n2 * d1,
            self._n3 * d2 + other._n3 * d1,
            d1 * d2,
        )

    def __neg__(self) -> "ExpVec":
        return ExpVec._raw(-self._n1, -self._n2, -self._n3, self._den)

    def __sub__(self, other: "ExpVec") -> "ExpVec":
        if not isinstance(other, ExpVec):
            return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return ExpVec._raw(self._n1 - other._n1, self._n2 - other._n2, self._n3 - other._n3, d1)
        return ExpVec._raw(
            self._n1 * d2 - other._n1 * d1,
            self._n2 * d2 - other._n2 * d1,
            self._n3 * d2 - other._n3 * d1,
            d1 * d2,
        )

    def __mul__(self, k: Rational) -> "ExpVec":
        if isinstance(k, Fraction):
            return ExpVec._raw(
                self._n1 * k.numerator, self._n2 * k.numerator, self._n3 * k.numerator,
                self._den * k.denominator,
            )
        if isinstance(k, int) and not isinstance(k, bool):
            return ExpVec._raw(self._n1 * k, self._n2 * k, self._n3 * k, self._den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, k: Rational) -> "ExpVec":
        if k == 0:
            raise ZeroDivisionError("ExpVec division by zero")
        if isinstance(k, int) and not isinstance(k, bool):
            return ExpVec._raw(self._n1, self._n2, self._n3, self._den * k)
        if isinstance(k, Fraction):
            return self * (1 / k)
        return NotImplemented

    def dot(self, mu: Sequence[Rational]) -> Fraction:
        """Exact inner product with an integer (or rational) 3-vector."""
        m1, m2, m3 = mu
        if all(isinstance(m, int) for m in (m1, m2, m3)):
            return Fraction(self._n1 * m1 + self._n2 * m2 + self._n3 * m3, self._den)
        return self.e1 * m1 + self.e2 * m2 + self.e3 * m3

    def scaled_dot(self, mu: Sequence[int], den: int) -> int:
        """``den * <self, mu>`` for an integer ``mu``; ``den`` must clear the denominator."""
        q, r = divmod(den, self._den)
        if r:
            raise InternalError(f"{den} is not a multiple of denominator {self._den}")
        return (self._n1 * mu[0] + self._n2 * mu[1] + self._n3 * mu[2]) * q

    def __eq__(self, other) -> bool:
        if isinstance(other, ExpVec):
            return (self._n1, self._n2, self._n3, self._den) == (
                other._n1, other._n2, other._n3, other._den)
        if isinstance(other, tuple) and len(other) == 3:
            return tuple(self) == tuple(_as_fraction(x) for x in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._n1, self._n2, self._n3, self._den))

    def __repr__(self) -> str:
        return f"ExpVec({', '.join(_fmt(x) for x in self)})"

    def __str__(self) -> str:
        return ",".join(_fmt(x) for x in self)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_expvec(v: ExpVec | Iterable[Rational]) -> ExpVec:
    return v if isinstance(v, ExpVec) else ExpVec(*v)
