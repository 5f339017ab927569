"""Arithmetic in F_p and F_{p^m}.

Elements of F_{p^m} are plain ints in ``[0, p**m)``.  The int ``x`` encodes
the polynomial-basis coordinates ``(x_0, ..., x_{m-1})`` as base-p digits,
constant coordinate least significant, so elements of the prime field F_p
are exactly the ints ``0..p-1`` and the class of the indeterminate is ``p``.
Multiplication goes through eagerly built log/antilog tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BadDegree,
    GcdViolation,
    InternalInconsistency,
    NotPrime,
    NotPrimitive,
    TableTooLarge,
    ZeroElement,
)

GFElem = int

MAX_TABLE_SIZE = 2**24


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def legendre_int(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def smallest_nonsquare(p: int) -> int:
    for a in range(2, p):
        if legendre_int(a, p) == -1:
            return a
    raise NotPrime(f"no nonsquare mod {p}")


# ---------------------------------------------------------------------------
# Polynomials over F_p
# ---------------------------------------------------------------------------


def _trim(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    c = [int(x) % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p, coefficients constant term first."""

    coeffs: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs, self.p))

    @classmethod
    def from_list(cls, coeffs: Sequence[int], p: int) -> "FpPoly":
        return cls(tuple(coeffs), p)

    @classmethod
    def x_power(cls, n: int, p: int) -> "FpPoly":
        return cls((0,) * n + (1,), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "FpPoly") -> "FpPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FpPoly(tuple(x + y for x, y in zip(a, b)), self.p)

    def __neg__(self) -> "FpPoly":
        return FpPoly(tuple(-c for c in self.coeffs), self.p)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        if self.is_zero() or other.is_zero():
            return FpPoly((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(tuple(out), self.p)

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = other.degree
        lead_inv = pow(other.coeffs[-1], -1, p)
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] % p
            if c == 0:
                continue
            f = c * lead_inv % p
            quot[i - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= f * b
        return FpPoly(tuple(quot), p), FpPoly(tuple(rem[:dq]), p)

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __call__(self, a: int) -> int:
        """Evaluate at an element of F_p."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def powmod(self, e: int, mod: "FpPoly") -> "FpPoly":
        result = FpPoly((1,), self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def gcd(self, other: "FpPoly") -> "FpPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        inv = pow(a.coeffs[-1], -1, self.p)
        return FpPoly(tuple(c * inv for c in a.coeffs), self.p)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)


def is_irreducible(f: FpPoly) -> bool:
    """Rabin's test: x^(p^m) = x mod f and gcd(x^(p^(m/q)) - x, f) = 1."""
    m, p = f.degree, f.p
    if m < 1:
        return False
    if m == 1:
        return True
    x = FpPoly((0, 1), p)
    if (x.powmod(p**m, f) - x) % f != FpPoly((), p):
        return False
    for q in factorize(m):
        g = (x.powmod(p ** (m // q), f) - x).gcd(f)
        if g.degree > 0:
            return False
    return True


def is_primitive_poly(f: FpPoly) -> bool:
    """Irreducible and the class of x has order p^m - 1."""
    if not f.is_monic() or f.coeffs[0] == 0 or not is_irreducible(f):
        return False
    p, m = f.p, f.degree
    order = p**m - 1
    x = FpPoly((0, 1), p)
    one = FpPoly((1,), p)
    return all(x.powmod(order // q, f) != one for q in factorize(order))


def iter_primitive_polys(p: int, m: int) -> Iterator[FpPoly]:
    """Primitive monic degree-m polynomials over F_p in search order.

    Candidates are ordered lexicographically by their constant-first
    coefficient vector ``(c_0, ..., c_{m-1})``.
    """
    for n in range(p**m):
        digits = [(n // p ** (m - 1 - i)) % p for i in range(m)]
        f = FpPoly(tuple(digits) + (1,), p)
        if is_primitive_poly(f):
            yield f


def find_primitive_poly(p: int, m: int) -> FpPoly:
    for f in iter_primitive_polys(p, m):
        return f
    raise NotPrimitive(f"no primitive polynomial of degree {m} over F_{p}")


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldParams:
    p: int
    m: int
    k: int
    prim_poly: tuple[int, ...] | None = None

    def validate(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise NotPrime(f"p={self.p} must be an odd prime")
        if self.m < 3 or self.m % 2 == 0:
            raise BadDegree(f"m={self.m} must be odd and >= 3")
        if self.k < 1:
            raise GcdViolation(f"k={self.k} must be a positive integer")
        if math.gcd(self.m, self.k) != 1:
            raise GcdViolation(f"gcd(m, k) = gcd({self.m}, {self.k}) != 1")


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable description of F_p and F_{p^m} with lookup tables.

    Build with :func:`build_field`.  Scalar methods take and return int
    encodings; the ``*_arr`` variants work elementwise on numpy arrays.
    """

    params: FieldParams
    poly: FpPoly
    lam: int
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    digits: np.ndarray = field(repr=False)
    trace_table: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def q(self) -> int:
        return self.params.p ** self.params.m

    @property
    def pi(self) -> GFElem:
        return self.params.p

    @property
    def basis(self) -> list[GFElem]:
        return [self.p**i for i in range(self.m)]

    def elements(self) -> range:
        return range(self.q)

    # -- coordinates --------------------------------------------------------

    def coords(self, x: GFElem) -> tuple[int, ...]:
        return tuple(int(d) for d in self.digits[x])

    def from_coords(self, coords: Sequence[int]) -> GFElem:
        p = self.p
        return sum((int(c) % p) * p**i for i, c in enumerate(coords))

    def encode_arr(self, digits: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (np.asarray(digits, dtype=np.int64) % self.p) @ weights

    # -- scalar arithmetic --------------------------------------------------

    def add(self, x: GFElem, y: GFElem) -> GFElem:
        return int(self.encode_arr(self.digits[x] + self.digits[y]))

    def neg(self, x: GFElem) -> GFElem:
        return int(self.encode_arr(-self.digits[x]))

    def sub(self, x: GFElem, y: GFElem) -> GFElem:
        return int(self.encode_arr(self.digits[x] - self.digits[y]))

    def mul(self, x: GFElem, y: GFElem) -> GFElem:
        if x == 0 or y == 0:
            return 0
        return int(self.antilog[(self.log[x] + self.log[y]) % (self.q - 1)])

    def inv(self, x: GFElem) -> GFElem:
        if x == 0:
            raise ZeroElement("0 has no inverse")
        return int(self.antilog[(-self.log[x]) % (self.q - 1)])

    def pow(self, x: GFElem, e: int) -> GFElem:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroElement("negative power of 0")
            return 0
        return int(self.antilog[(int(self.log[x]) * e) % (self.q - 1)])

    def pi_pow(self, e: int) -> GFElem:
        """pi**e with e reduced mod p^m - 1 (negative e allowed)."""
        return int(self.antilog[e % (self.q - 1)])

    def frobenius(self, x: GFElem, i: int = 1) -> GFElem:
        return self.pow(x, self.p**i)

    def trace(self, x: GFElem) -> int:
        """x + x^p + ... + x^(p^(m-1)), returned as an int in [0, p)."""
        acc, y = 0, x
        for _ in range(self.m):
            acc = self.add(acc, y)
            y = self.frobenius(y)
        if acc >= self.p:
            raise InternalInconsistency(f"trace of {x} left F_p: {acc}")
        return acc

    def is_square(self, x: GFElem) -> bool:
        return x != 0 and int(self.log[x]) % 2 == 0

    # -- vectorized arithmetic ---------------------------------------------

    def add_arr(self, x, y) -> np.ndarray:
        return self.encode_arr(self.digits[x] + self.digits[y])

    def sub_arr(self, x, y) -> np.ndarray:
        return self.encode_arr(self.digits[x] - self.digits[y])

    def neg_arr(self, x) -> np.ndarray:
        return self.encode_arr(-self.digits[x])

    def mul_arr(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        e = (self.log[x] + self.log[y]) % (self.q - 1)
        return np.where((x == 0) | (y == 0), 0, self.antilog[e])

    def pow_arr(self, x, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        r = self.antilog[(self.log[x] * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(x == 0, 0 if e else 1, r)

    def trace_arr(self, x) -> np.ndarray:
        return self.trace_table[np.asarray(x, dtype=np.int64)]

    # -- polynomials with coefficients in F_{p^m} --------------------------

    def eval_poly(self, f: FpPoly, a: GFElem) -> GFElem:
        acc = 0
        for c in reversed(f.coeffs):
            acc = self.add(self.mul(acc, a), c)
        return acc


def _antilog_table(f: FpPoly) -> list[int]:
    """Powers of x modulo f as int encodings, x^0 .. x^(p^m - 2)."""
    p, m = f.p, f.degree
    low = f.coeffs[:m]
    coords = [1] + [0] * (m - 1)
    out = []
    for _ in range(p**m - 1):
        out.append(sum(c * p**i for i, c in enumerate(coords)))
        top = coords[-1]
        coords = [0] + coords[:-1]
        if top:
            coords = [(c - top * r) % p for c, r in zip(coords, low)]
    return out


def build_field(params: FieldParams) -> FieldCtx:
    params.validate()
    p, m = params.p, params.m
    q = p**m
    if q > MAX_TABLE_SIZE:
        raise TableTooLarge(f"p^m = {q} exceeds the table limit {MAX_TABLE_SIZE}")
    if params.prim_poly is None:
        poly = find_primitive_poly(p, m)
        params = FieldParams(p, m, params.k, poly.coeffs)
    else:
        poly = FpPoly(tuple(params.prim_poly), p)
        if poly.degree != m or not is_primitive_poly(poly):
            raise NotPrimitive(f"{poly} is not a primitive polynomial of degree {m} over F_{p}")
        params = FieldParams(p, m, params.k, poly.coeffs)

    antilog = np.array(_antilog_table(poly), dtype=np.int64)
    if len(np.unique(antilog)) != q - 1:
        raise NotPrimitive(f"{poly}: root does not generate F_{q}^*")
    log = np.full(q, -1, dtype=np.int64)
    log[antilog] = np.arange(q - 1, dtype=np.int64)
    digits = (np.arange(q, dtype=np.int64)[:, None] // p ** np.arange(m)) % p

    lam = smallest_nonsquare(p)
    ctx = FieldCtx(params, poly, lam, antilog, log, digits, np.zeros(q, dtype=np.int64))
    # Tr is F_p-linear: tabulate it from the traces of the basis vectors.
    basis_tr = np.array([ctx.trace(e) for e in ctx.basis], dtype=np.int64)
    trace_table = (digits @ basis_tr) % p
    for a in (antilog, log, digits, trace_table):
        _readonly(a)
    return FieldCtx(params, poly, lam, antilog, log, digits, trace_table)


def legendre(ctx: FieldCtx, a: int) -> int:
    return legendre_int(a, ctx.p)


def lambda_power_check(ctx: FieldCtx) -> int:
    """Sign s with lambda^((1 + p^k)/2) = s * lambda, computed in F_{p^m}."""
    e = (1 + ctx.p**ctx.k) // 2
    val = ctx.pow(ctx.lam, e)
    if val == ctx.lam:
        return 1
    if val == ctx.neg(ctx.lam):
        return -1
    raise InternalInconsistency(f"lambda^{e} = {val} is neither +lambda nor -lambda")


def cyclotomic_coset(ctx: FieldCtx, a: GFElem) -> list[GFElem]:
    """Conjugates a, a^p, a^(p^2), ... of a nonzero element."""
    out = [a]
    y = ctx.frobenius(a)
    while y != a:
        out.append(y)
        y = ctx.frobenius(y)
    return out


def minimal_poly(ctx: FieldCtx, a: GFElem) -> FpPoly:
    if a == 0:
        raise ZeroElement("minimal polynomial requested for 0")
    # product of (X - conj) with coefficients in F_{p^m}, constant first
    coeffs = [1]
    for r in cyclotomic_coset(ctx, a):
        nr = ctx.neg(r)
        shifted = [0] + coeffs
        scaled = [ctx.mul(c, nr) for c in coeffs] + [0]
        coeffs = [ctx.add(s, t) for s, t in zip(shifted, scaled)]
    if any(c >= ctx.p for c in coeffs):
        raise InternalInconsistency(f"minimal polynomial of {a} not over F_p: {coeffs}")
    return FpPoly(tuple(coeffs), ctx.p)
