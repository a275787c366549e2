"""Exact scalar arithmetic: eighth roots of unity and Gaussian-dyadic numbers.

All phases appearing in the code operators are powers of omega = exp(i*pi/4);
amplitudes are (a + b*i) / 2**k with integer a, b. Both are exact, so every
probability computed downstream is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exceptions import NotGaussianPhase, OddExponent

# Order of the phase group: omega**8 == 1.  Eq-level phases only need fourth
# roots; the single square root used for closed canonical strings needs eighth.
PHASE_ORDER = 8


@dataclass(frozen=True)
class UnitPhase:
    """omega**m with omega = exp(i*pi/4), m taken mod 8."""

    m: int

    def __post_init__(self):
        object.__setattr__(self, "m", self.m % PHASE_ORDER)

    def __mul__(self, other: "UnitPhase") -> "UnitPhase":
        return UnitPhase(self.m + other.m)

    def inv(self) -> "UnitPhase":
        return UnitPhase(-self.m)

    def conj(self) -> "UnitPhase":
        return UnitPhase(-self.m)

    def __pow__(self, n: int) -> "UnitPhase":
        return UnitPhase(self.m * n)

    def sqrt_branch(self) -> "UnitPhase":
        """Principal square root: omega**(m/2) with m/2 in {0,1,2,3}."""
        if self.m % 2:
            raise OddExponent(f"no square root branch for omega**{self.m}")
        return UnitPhase(self.m // 2)

    @property
    def is_fourth_root(self) -> bool:
        return self.m % 2 == 0

    def as_complex(self) -> complex:
        from cmath import exp, pi

        return exp(1j * pi * self.m / 4)

    def __repr__(self):
        names = {0: "1", 2: "i", 4: "-1", 6: "-i"}
        return names.get(self.m, f"w^{self.m}")


ONE = UnitPhase(0)
I_PHASE = UnitPhase(2)
MINUS_ONE = UnitPhase(4)
MINUS_I = UnitPhase(6)


def phase_mul(p: UnitPhase, q: UnitPhase) -> UnitPhase:
    return p * q


def phase_inv(p: UnitPhase) -> UnitPhase:
    return p.inv()


def phase_sqrt_branch(p: UnitPhase) -> UnitPhase:
    return p.sqrt_branch()


class ExactScalar:
    """Gaussian-dyadic number (a + b*i) / 2**k, canonically reduced."""

    __slots__ = ("a", "b", "k")

    def __init__(self, a: int, b: int = 0, k: int = 0):
        if k < 0:
            raise ValueError("k must be non-negative")
        while k > 0 and a % 2 == 0 and b % 2 == 0:
            a //= 2
            b //= 2
            k -= 1
        self.a = a
        self.b = b
        self.k = k

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "ExactScalar":
        return cls(0, 0, 0)

    @classmethod
    def one(cls) -> "ExactScalar":
        return cls(1, 0, 0)

    @classmethod
    def from_phase(cls, p: UnitPhase) -> "ExactScalar":
        try:
            a, b = _PHASE_TABLE[p.m]
        except KeyError:
            raise NotGaussianPhase(f"omega**{p.m} is not a Gaussian integer")
        return cls(a, b, 0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        k = max(self.k, other.k)
        sa = self.a << (k - self.k)
        sb = self.b << (k - self.k)
        oa = other.a << (k - other.k)
        ob = other.b << (k - other.k)
        return ExactScalar(sa + oa, sb + ob, k)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.a, -self.b, self.k)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        a = self.a * other.a - self.b * other.b
        b = self.a * other.b + self.b * other.a
        return ExactScalar(a, b, self.k + other.k)

    def mul_phase(self, p: UnitPhase) -> "ExactScalar":
        return self * ExactScalar.from_phase(p)

    def conj(self) -> "ExactScalar":
        return ExactScalar(self.a, -self.b, self.k)

    def halve(self) -> "ExactScalar":
        return ExactScalar(self.a, self.b, self.k + 1)

    def abs_sq(self) -> Fraction:
        return Fraction(self.a * self.a + self.b * self.b, 4**self.k)

    # -- predicates / views -------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def as_fraction_pair(self) -> Tuple[Fraction, Fraction]:
        d = 2**self.k
        return Fraction(self.a, d), Fraction(self.b, d)

    def as_complex(self) -> complex:
        return complex(self.a, self.b) / 2**self.k

    def __eq__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.k == other.k

    def __hash__(self):
        return hash((self.a, self.b, self.k))

    def __repr__(self):
        if self.k == 0:
            return f"({self.a}{self.b:+}i)"
        return f"({self.a}{self.b:+}i)/2^{self.k}"


_PHASE_TABLE = {0: (1, 0), 2: (0, 1), 4: (-1, 0), 6: (0, -1)}
