"""Integer parametrization of arithmetic similarity classes.

A class is named by a quadruple (a, b, c, d) with tau = a/b + i*sqrt(c/d),
gcd(a,b) = gcd(c,d) = 1, 0 <= 2a <= b, and c*b^2 >= d*(b^2 - a^2) so that tau
lies in the fundamental domain. Well-rounded classes are the sub-family
d = b^2, c = b^2 - a^2, named by the pair (a, b) alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import CanonicalTau


class QuadrupleError(ValueError):
    """Base class for invalid class parameters."""


class CoprimalityError(QuadrupleError):
    """gcd(a, b) != 1 or gcd(c, d) != 1."""


class RangeError(QuadrupleError):
    """Parameter signs or the 0 <= 2a <= b constraint violated."""


class DomainError(QuadrupleError):
    """c*b^2 < d*(b^2 - a^2): tau would fall outside the fundamental domain."""


class ClassKind(enum.Enum):
    WELL_ROUNDED = "WellRounded"
    SEMISTABLE_NOT_WR = "SemiStableNotWR"
    NOT_SEMISTABLE = "NotSemiStable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TauQuadruple:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if a < 0 or b < 1 or c < 1 or d < 1:
            raise RangeError(f"bad signs in ({a},{b},{c},{d})")
        if 2 * a > b:
            raise RangeError(f"2a > b in ({a},{b},{c},{d})")
        if gcd(a, b) != 1 or gcd(c, d) != 1:
            raise CoprimalityError(f"non-coprime entries in ({a},{b},{c},{d})")
        if c * b * b < d * (b * b - a * a):
            raise DomainError(f"c/d < 1 - a^2/b^2 for ({a},{b},{c},{d})")

    @property
    def tau(self) -> CanonicalTau:
        return CanonicalTau(Fraction(self.a, self.b), Fraction(self.c, self.d))


@dataclass(frozen=True)
class WrPair:
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if (a, b) == (0, 1):
            return
        if a < 1 or b < 1 or 2 * a > b or gcd(a, b) != 1:
            raise RangeError(f"invalid well-rounded pair ({a},{b})")


def validate_quadruple(a: int, b: int, c: int, d: int) -> TauQuadruple:
    """Construct a TauQuadruple, raising a specific error on each failure mode."""
    return TauQuadruple(a, b, c, d)


def classify(q: TauQuadruple) -> ClassKind:
    """Partition a valid quadruple into WR / semi-stable-not-WR / not semi-stable."""
    bsq = q.b * q.b
    if q.d == bsq and q.c == bsq - q.a * q.a:
        return ClassKind.WELL_ROUNDED
    if q.c <= q.d:
        return ClassKind.SEMISTABLE_NOT_WR
    return ClassKind.NOT_SEMISTABLE


def max_height(q: TauQuadruple) -> int:
    """Naive maximum height max{|a|, |b|, |c|, |d|}."""
    return max(abs(q.a), abs(q.b), abs(q.c), abs(q.d))


def wr_pair_to_quadruple(p: WrPair) -> TauQuadruple:
    """(a, b) -> (a, b, b^2 - a^2, b^2); always classifies WellRounded."""
    bsq = p.b * p.b
    return TauQuadruple(p.a, p.b, bsq - p.a * p.a, bsq)


def weil_height_bound(q: TauQuadruple) -> float:
    """Archimedean upper bound max{b*sqrt(d), sqrt(a^2*d + b^2*c)} on the
    Weil height of the class; finite places only tighten it."""
    return max(q.b * math.sqrt(q.d),
               math.sqrt(q.a * q.a * q.d + q.b * q.b * q.c))


def weil_height_ceiling(q: TauQuadruple) -> float:
    """(sqrt(5)/2) * m^(3/2), the closed-form cap on weil_height_bound."""
    return math.sqrt(5) / 2 * max_height(q) ** 1.5


def wr_weil_height_bound(p: WrPair) -> int:
    """Archimedean Weil-height bound for a well-rounded class: exactly b."""
    return p.b


def pair_height(p: WrPair) -> int:
    """Height of a WR class under the pair convention: max{|a|, |b|} = b."""
    return p.b


def quadruple_height(p: WrPair) -> int:
    """Height of a WR class measured on its full quadruple: b^2."""
    return max_height(wr_pair_to_quadruple(p))
