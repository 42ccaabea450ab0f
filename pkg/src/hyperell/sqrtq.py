"""Exact values a + b*sqrt(q) with rational a, b.

Central values of the L-polynomials live in Q(sqrt(q)), and every moment
accumulated in the package is a finite sum of such values.  Keeping the two
rational coordinates exact makes equality checks and cross-route identities
sharp instead of float-tolerant.  sqrt(q) is irrational for prime q, so
(a, b) is unique and dataclass equality is the right equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"rational coordinate expected, got {type(x).__name__}")


@dataclass(frozen=True)
class SqrtQRational:
    a: Fraction
    b: Fraction
    q: int

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.q < 3 or self.q % 2 == 0:
            raise ValueError("q must be an odd prime")

    @staticmethod
    def zero(q: int) -> "SqrtQRational":
        return SqrtQRational(Fraction(0), Fraction(0), q)

    @staticmethod
    def of(a, q: int) -> "SqrtQRational":
        return SqrtQRational(_frac(a), Fraction(0), q)

    def _match(self, other: "SqrtQRational"):
        if self.q != other.q:
            raise ValueError("mixing values over different q")

    def __add__(self, other: "SqrtQRational") -> "SqrtQRational":
        self._match(other)
        return SqrtQRational(self.a + other.a, self.b + other.b, self.q)

    def __sub__(self, other: "SqrtQRational") -> "SqrtQRational":
        self._match(other)
        return SqrtQRational(self.a - other.a, self.b - other.b, self.q)

    def __neg__(self) -> "SqrtQRational":
        return SqrtQRational(-self.a, -self.b, self.q)

    def __mul__(self, other):
        if isinstance(other, SqrtQRational):
            self._match(other)
            return SqrtQRational(
                self.a * other.a + self.b * other.b * self.q,
                self.a * other.b + self.b * other.a,
                self.q,
            )
        c = _frac(other)
        return SqrtQRational(self.a * c, self.b * c, self.q)

    __rmul__ = __mul__

    def scale(self, c) -> "SqrtQRational":
        c = _frac(c)
        return SqrtQRational(self.a * c, self.b * c, self.q)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.q)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.q})"
