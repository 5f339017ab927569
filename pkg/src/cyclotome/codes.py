"""The cyclic codes C_(p,m,k) and their weight distributions.

The code has length n = p^m - 1, dimension 3m, and codewords

    c_(a,b,c)[t] = Tr(a pi^t + b (-pi)^t + c pi^((p^k+1) t / 2)),  0 <= t < n.

Three routes to the weight distribution are provided and are expected to
agree: enumerating every codeword, mapping the value distribution of the
exponential sums S / T through the weight identity, and the closed form.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import charsum
from .errors import DegenerateCosets, InternalInconsistency, NonDivisibleValue, TooLarge
from .gf import FieldCtx, FpPoly, GFElem, minimal_poly

BRUTEFORCE_LIMIT = 2**26


@dataclass(frozen=True, eq=False)
class CyclicCodeSpec:
    ctx: FieldCtx
    h0: FpPoly
    h1: FpPoly
    h2: FpPoly
    h: FpPoly
    n: int
    dim: int

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def half_exponent(self) -> int:
        return (self.ctx.p**self.ctx.k + 1) // 2


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[int, ...]
    label: tuple[GFElem, GFElem, GFElem]


def build_code(ctx: FieldCtx) -> CyclicCodeSpec:
    p, m = ctx.p, ctx.m
    e = (p**ctx.k + 1) // 2
    roots = (ctx.pi_pow(-1), ctx.inv(ctx.neg(ctx.pi)), ctx.pi_pow(-e))
    h0, h1, h2 = (minimal_poly(ctx, r) for r in roots)
    for name, f in (("h0", h0), ("h1", h1), ("h2", h2)):
        if f.degree != m:
            raise DegenerateCosets(f"{name} = {f} has degree {f.degree}, expected {m}")
    if len({h0, h1, h2}) != 3:
        raise DegenerateCosets(f"minimal polynomials not pairwise distinct: {h0}, {h1}, {h2}")
    h = h0 * h1 * h2
    n = p**m - 1
    xn1 = FpPoly.x_power(n, p) - FpPoly((1,), p)
    if not (xn1 % h).is_zero():
        raise InternalInconsistency(f"h = {h} does not divide x^{n} - 1")
    return CyclicCodeSpec(ctx, h0, h1, h2, h, n, 3 * m)


def codeword(spec: CyclicCodeSpec, a: GFElem, b: GFElem, c: GFElem) -> Codeword:
    ctx = spec.ctx
    e = spec.half_exponent
    out = []
    for t in range(spec.n):
        pt = ctx.pi_pow(t)
        bt = ctx.mul(b, pt)
        if t % 2:
            bt = ctx.neg(bt)
        z = ctx.add(ctx.add(ctx.mul(a, pt), bt), ctx.mul(c, ctx.pi_pow(e * t)))
        out.append(ctx.trace(z))
    return Codeword(tuple(out), (a, b, c))


def weight_of(spec: CyclicCodeSpec, w: Codeword | Sequence[int]) -> int:
    symbols = w.symbols if isinstance(w, Codeword) else w
    return sum(1 for s in symbols if s % spec.p)


def charsum_value(spec: CyclicCodeSpec, a: GFElem, b: GFElem, c: GFElem, d=charsum.d_fast) -> int:
    """S(a, b, c) for even k, T(a, b, c) for odd k."""
    if spec.ctx.k % 2 == 0:
        return charsum.s_value(spec.ctx, a, b, c, d=d)
    return charsum.t_value(spec.ctx, a, b, c, d=d)


def weight_from_value(p: int, m: int, value: int) -> int:
    """Hamming weight p^m - p^(m-1) - value / (2p)."""
    if value % (2 * p):
        raise NonDivisibleValue(f"{value} is not divisible by 2p = {2 * p}")
    return p**m - p ** (m - 1) - value // (2 * p)


def weight_by_formula(spec: CyclicCodeSpec, a: GFElem, b: GFElem, c: GFElem, d=charsum.d_fast) -> int:
    return weight_from_value(spec.p, spec.ctx.m, charsum_value(spec, a, b, c, d=d))


# ---------------------------------------------------------------------------
# Cyclic structure
# ---------------------------------------------------------------------------


def is_codeword(spec: CyclicCodeSpec, symbols: Sequence[int]) -> bool:
    """Parity-check membership: c(x) h(x) = 0 mod x^n - 1.

    With c(x) = sum c_t x^t, every codeword vanishes at the n-th roots of
    unity outside the zero set of h, so multiplying by h itself (not its
    reciprocal) annihilates it.
    """
    c = np.asarray(symbols, dtype=np.int64) % spec.p
    if len(c) != spec.n:
        return False
    prod = np.convolve(c, np.asarray(spec.h.coeffs, dtype=np.int64))
    folded = np.zeros(spec.n, dtype=np.int64)
    np.add.at(folded, np.arange(len(prod)) % spec.n, prod)
    return not (folded % spec.p).any()


def cyclic_shift(symbols: Sequence[int], r: int = 1) -> tuple[int, ...]:
    """(c_{n-1}, c_0, ..., c_{n-2}) for r = 1."""
    s = tuple(symbols)
    r %= len(s)
    return s[-r:] + s[:-r] if r else s


def trace_rows(spec: CyclicCodeSpec) -> np.ndarray:
    """3m x n matrix whose rows are the codewords of the basis labels.

    Row i (resp. m+i, 2m+i) is c_(e_i,0,0) (resp. c_(0,e_i,0), c_(0,0,e_i)).
    Since every codeword is F_p-linear in the label coordinates, a label's
    codeword is its coordinate vector times this matrix.
    """
    ctx = spec.ctx
    t = np.arange(spec.n, dtype=np.int64)
    pt = ctx.antilog[t]
    mt = np.where(t % 2 == 1, ctx.neg_arr(pt), pt)
    ct = ctx.antilog[(spec.half_exponent * t) % (ctx.q - 1)]
    rows = []
    for seq in (pt, mt, ct):
        for e in ctx.basis:
            rows.append(ctx.trace_arr(ctx.mul_arr(e, seq)))
    return np.array(rows, dtype=np.int64)


# ---------------------------------------------------------------------------
# Weight distributions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightDist:
    n: int
    dim: int
    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, n: int, dim: int, counts) -> "WeightDist":
        items = counts.items() if hasattr(counts, "items") else counts
        entries = tuple(sorted((int(w), int(f)) for w, f in items if f))
        return cls(n, dim, entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(f for _, f in self.entries)

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w, _ in self.entries if w]

    @property
    def min_distance(self) -> int:
        return min(self.nonzero_weights)

    def first_moment(self) -> int:
        return sum(w * f for w, f in self.entries)

    def check(self, p: int) -> None:
        if self.total != p**self.dim:
            raise InternalInconsistency(f"frequencies sum to {self.total}, not {p}^{self.dim}")
        if self.as_dict().get(0) != 1:
            raise InternalInconsistency("weight 0 must occur exactly once")

    def enumerator(self) -> str:
        terms = []
        for w, f in self.entries:
            terms.append(str(f) if w == 0 else f"{f}z^{w}")
        return " + ".join(terms)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "entries": [{"weight": w, "freq": f} for w, f in self.entries],
            "enumerator": self.enumerator(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "WeightDist":
        d = json.loads(text)
        return cls(d["n"], d["dim"], tuple((e["weight"], e["freq"]) for e in d["entries"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "frequency"])
        w.writerows(self.entries)
        return buf.getvalue()


def weight_dist_bruteforce(spec: CyclicCodeSpec, chunk: int = 1 << 16) -> WeightDist:
    """Hamming weights of all p^(3m) codewords, counted directly."""
    p, dim = spec.p, spec.dim
    total = p**dim
    if total > BRUTEFORCE_LIMIT:
        raise TooLarge(f"p^(3m) = {total} codewords exceeds the enumeration limit {BRUTEFORCE_LIMIT}")
    g = trace_rows(spec)
    place = p ** np.arange(dim, dtype=np.int64)
    counts = np.zeros(spec.n + 1, dtype=np.int64)
    for start in range(0, total, chunk):
        labels = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (labels[:, None] // place) % p
        words = (digits @ g) % p
        counts += np.bincount((words != 0).sum(axis=1), minlength=spec.n + 1)
    return WeightDist.from_counts(spec.n, dim, {w: int(f) for w, f in enumerate(counts)})


def weight_dist_charsum(spec: CyclicCodeSpec, engine: str = "auto", threads: int | None = None) -> WeightDist:
    ctx = spec.ctx
    dist = charsum.s_distribution(ctx, engine=engine, threads=threads)
    counts: Counter = Counter()
    for value, freq in dist.freqs:
        counts[weight_from_value(ctx.p, ctx.m, value)] += freq
    return WeightDist.from_counts(spec.n, spec.dim, counts)


def closed_form_weights(p: int, m: int) -> dict[int, int]:
    """Closed-form weight distribution (weight -> frequency)."""
    q = p**m
    h = (m - 1) // 2
    n0, n1, nm = charsum.d_tallies_closed_form(p, m)
    rows = Counter()
    rows[0] += 1
    rows[(p - 1) * p ** (m - 1) // 2] += 2 * (q - 1)
    rows[(p - 1) * (2 * p ** (m - 1) - p**h) // 2] += (q - 1) * (q - p ** (m - 1)) * (p ** (m - 1) + p**h)
    rows[(p - 1) * (2 * p ** (m - 1) + p**h) // 2] += (q - 1) * (q - p ** (m - 1)) * (p ** (m - 1) - p**h)
    rows[(p - 1) * (p ** (m - 1) - p**h)] += (q - 1) * n1 * n1
    rows[(p - 1) * (p ** (m - 1) + p**h)] += (q - 1) * nm * nm
    rows[(p - 1) * p ** (m - 1)] += charsum.zero_value_frequency(p, m)
    return dict(rows)


def weight_dist_closed_form(spec: CyclicCodeSpec) -> WeightDist:
    p, m = spec.p, spec.ctx.m
    wd = WeightDist.from_counts(spec.n, spec.dim, closed_form_weights(p, m))
    if wd.total != p ** (3 * m):
        raise InternalInconsistency(f"closed-form frequencies sum to {wd.total}, not {p}^{3 * m}")
    return wd


def pless_first_moment(p: int, m: int) -> int:
    """sum of w A_w for a length p^m - 1 code of dimension 3m with no zero coordinate."""
    return (p - 1) * p ** (3 * m - 1) * (p**m - 1)
