"""Exact elements of Z[zeta_p] stored as coefficient counts.

``CycInt(counts, p)`` stands for ``sum(counts[j] * zeta**j)``.  Because
``1 + zeta + ... + zeta**(p-1) = 0`` the representation is not unique; the
canonical form subtracts ``counts[p-1]`` from every coordinate so the last
one is zero, which leaves a unique Z-basis expansion over
``1, zeta, ..., zeta**(p-2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonIntegerSum


@dataclass(frozen=True)
class CycInt:
    counts: tuple[int, ...]
    p: int

    def __post_init__(self):
        c = tuple(int(x) for x in self.counts)
        if len(c) != self.p:
            raise ValueError(f"expected {self.p} counts, got {len(c)}")
        last = c[-1]
        object.__setattr__(self, "counts", tuple(x - last for x in c))

    @classmethod
    def integer(cls, n: int, p: int) -> "CycInt":
        return cls((n,) + (0,) * (p - 1), p)

    @classmethod
    def zeta_power(cls, j: int, p: int) -> "CycInt":
        c = [0] * p
        c[j % p] = 1
        return cls(tuple(c), p)

    @classmethod
    def from_exponents(cls, exponents: Sequence[int], p: int) -> "CycInt":
        """sum of zeta**e over the given exponents (tallied mod p)."""
        c = [0] * p
        for e in exponents:
            c[int(e) % p] += 1
        return cls(tuple(c), p)

    def is_rational_integer(self) -> bool:
        return all(x == 0 for x in self.counts[1:])

    def to_int(self) -> int:
        if not self.is_rational_integer():
            raise NonIntegerSum(f"{self} is not a rational integer")
        return self.counts[0]

    def __add__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            other = CycInt.integer(other, self.p)
        return CycInt(tuple(a + b for a, b in zip(self.counts, other.counts)), self.p)

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(tuple(-a for a in self.counts), self.p)

    def __sub__(self, other: "CycInt | int") -> "CycInt":
        return self + (-other)

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        p = self.p
        if isinstance(other, int):
            return CycInt(tuple(a * other for a in self.counts), p)
        out = [0] * p
        for i, a in enumerate(self.counts):
            if a:
                for j, b in enumerate(other.counts):
                    out[(i + j) % p] += a * b
        return CycInt(tuple(out), p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycInt":
        result = CycInt.integer(1, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, y: int) -> "CycInt":
        """Image under zeta -> zeta**y (y a unit mod p)."""
        out = [0] * self.p
        for j, a in enumerate(self.counts):
            out[(j * y) % self.p] += a
        return CycInt(tuple(out), self.p)

    def __str__(self) -> str:
        terms = [f"{a}*z^{j}" if j else str(a) for j, a in enumerate(self.counts) if a]
        return " + ".join(terms) if terms else "0"


def quadratic_gauss_sum(p: int) -> CycInt:
    """g = sum over t mod p of zeta**(t^2); g**2 = (-1/p) * p."""
    return CycInt.from_exponents([t * t for t in range(p)], p)
