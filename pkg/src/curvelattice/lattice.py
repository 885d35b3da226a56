"""Exact rank-2 lattice arithmetic.

Divisor classes are integer pairs ``(a, b)`` in a fixed basis of a rank-2
Picard lattice; the intersection form is stored as a :class:`Gram2`.  All
arithmetic is on Python integers and :class:`fractions.Fraction`, so no value
is ever rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class LatticeError(ValueError):
    """Base class for lattice and model validation failures."""


class OddSquare(LatticeError):
    """A self-intersection came out odd, so the lattice is not even."""


@dataclass(frozen=True)
class Gram2:
    """Symmetric 2x2 intersection matrix of an even hyperbolic lattice."""

    g11: int
    g12: int
    g22: int

    def __post_init__(self):
        if self.g11 % 2 or self.g22 % 2:
            raise LatticeError(
                f"even lattice: diagonal entries must be even, got {self.g11}, {self.g22}"
            )
        if self.det >= 0:
            raise LatticeError(
                f"signature (1,1): determinant must be negative, got {self.det}"
            )

    @classmethod
    def from_matrix(cls, rows) -> "Gram2":
        (a, b), (c, d) = rows
        if b != c:
            raise LatticeError(f"symmetric: off-diagonal entries differ ({b} != {c})")
        return cls(int(a), int(b), int(d))

    @property
    def det(self) -> int:
        return self.g11 * self.g22 - self.g12 * self.g12

    def as_matrix(self) -> list[list[int]]:
        return [[self.g11, self.g12], [self.g12, self.g22]]


@dataclass(frozen=True, order=True)
class DivClass2:
    """The class ``a*G1 + b*G2``; supports the group operations."""

    a: int
    b: int

    def __add__(self, other: "DivClass2") -> "DivClass2":
        return DivClass2(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivClass2") -> "DivClass2":
        return DivClass2(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivClass2":
        return DivClass2(-self.a, -self.b)

    def __mul__(self, k: int) -> "DivClass2":
        return DivClass2(k * self.a, k * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    @classmethod
    def parse(cls, text: str) -> "DivClass2":
        parts = text.replace("(", "").replace(")", "").split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        return cls(int(parts[0], 10), int(parts[1], 10))


def pair(D: DivClass2, E: DivClass2, G: Gram2) -> int:
    """Intersection number ``D.E``."""
    return D.a * E.a * G.g11 + (D.a * E.b + D.b * E.a) * G.g12 + D.b * E.b * G.g22


def self_int(D: DivClass2, G: Gram2) -> int:
    return pair(D, D, G)


def euler_char_k3(D: DivClass2, G: Gram2) -> int:
    """Riemann-Roch on a K3 surface: ``chi(O_S(D)) = D^2/2 + 2``."""
    sq = self_int(D, G)
    if sq % 2:
        raise OddSquare(f"D^2 = {sq} is odd for D = {D}; the model is not an even lattice")
    return sq // 2 + 2
