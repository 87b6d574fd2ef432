"""Unit-modulus phases.

A :class:`Phase` is either exact, stored as a root of unity exp(2*pi*i*k/N)
with canonical (k, N), or floating, stored as a unit complex number.  Exact
phases stay exact under multiplication, conjugation and powers; a floating
phase infects products.  Floating phases can be snapped back onto a root
lattice when they are close enough to one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gcd

from .errors import NotRootOfUnity, NotUnitPhase

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Phase:
    """A complex number of modulus one, exact or floating."""

    k: int = 0
    N: int = 1
    z: complex | None = None  # set in floating mode only

    @staticmethod
    def exact(k: int, N: int) -> "Phase":
        if N <= 0:
            raise ValueError(f"root order must be positive, got {N}")
        k %= N
        g = gcd(k, N)
        if k == 0:
            return Phase(0, 1)
        return Phase(k // g, N // g)

    @staticmethod
    def one() -> "Phase":
        return Phase(0, 1)

    @staticmethod
    def minus_one() -> "Phase":
        return Phase(1, 2)

    @staticmethod
    def from_complex(z: complex, tol: float = 1e-9) -> "Phase":
        z = complex(z)
        if abs(abs(z) - 1.0) > tol:
            raise NotUnitPhase(f"|z| = {abs(z):.3e} deviates from 1 beyond {tol:.1e}")
        return Phase(0, 0, z / abs(z))

    @staticmethod
    def coerce(value, tol: float = 1e-9) -> "Phase":
        """Accept a Phase, an int (+1/-1) or a complex number."""
        if isinstance(value, Phase):
            return value
        if isinstance(value, int):
            if value == 1:
                return Phase.one()
            if value == -1:
                return Phase.minus_one()
        return Phase.from_complex(complex(value), tol)

    @property
    def is_exact(self) -> bool:
        return self.z is None

    @property
    def value(self) -> complex:
        if self.z is not None:
            return self.z
        if self.N == 1:
            return 1.0 + 0.0j
        if 2 * self.k == self.N:
            return -1.0 + 0.0j
        return cmath.exp(2j * math.pi * self.k / self.N)

    def __mul__(self, other: "Phase") -> "Phase":
        if self.is_exact and other.is_exact:
            n = self.N * other.N // gcd(self.N, other.N)
            return Phase.exact(self.k * (n // self.N) + other.k * (n // other.N), n)
        return Phase(0, 0, self.value * other.value)

    def conj(self) -> "Phase":
        if self.is_exact:
            return Phase.exact(-self.k, self.N)
        return Phase(0, 0, self.z.conjugate())

    def conj_pow(self, flag: int) -> "Phase":
        """Apply complex conjugation ``flag`` times (flag in {0, 1})."""
        return self.conj() if flag % 2 else self

    def inverse(self) -> "Phase":
        return self.conj()

    def __pow__(self, n: int) -> "Phase":
        if self.is_exact:
            return Phase.exact(self.k * n, self.N)
        return Phase(0, 0, self.value ** n)

    def try_snap(self, modulus: int, tol: float = 1e-6) -> "Phase | None":
        """Nearest point of the modulus-th root lattice, or None if too far."""
        if self.is_exact:
            if modulus % self.N == 0:
                return Phase.exact(self.k * (modulus // self.N), modulus)
            # fall through and snap numerically, e.g. N=3 onto modulus=6
        ang = cmath.phase(self.value) / TWO_PI  # in (-1/2, 1/2]
        k = round(ang * modulus) % modulus
        root = Phase.exact(k, modulus)
        if abs(root.value - self.value) > tol:
            return None
        return root

    def snap(self, modulus: int, tol: float = 1e-6) -> "Phase":
        snapped = self.try_snap(modulus, tol)
        if snapped is None:
            raise NotRootOfUnity(
                f"{self.value:.12g} is not a {modulus}-th root of unity within {tol:.1e}"
            )
        return snapped

    def close_to(self, other: "Phase", tol: float = 1e-9) -> bool:
        if self.is_exact and other.is_exact:
            return (self.k, self.N) == (other.k, other.N)
        return abs(self.value - other.value) <= tol

    def is_one(self, tol: float = 1e-9) -> bool:
        return self.close_to(Phase.one(), tol)

    def __repr__(self) -> str:
        if self.is_exact:
            if self.N == 1:
                return "Phase(1)"
            if self.N == 2:
                return "Phase(-1)"
            return f"Phase(exp(2pi i {self.k}/{self.N}))"
        return f"Phase({self.z:.6g})"
