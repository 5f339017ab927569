"""Exponential sums D(u, v), S(a, b, c), T(a, b, c) and their value distributions.

    D(u, v) = sum_{y in F_p^*} sum_{x in F_{p^m}} zeta^(y Q_{u,v}(x))
    S(a, b, c) = D(a + b, c) + D(a - b, c)        (k even)
    T(a, b, c) = D(a + b, c) + D(a - b, -c)       (k odd)

Two engines compute D.  ``direct`` tallies the values of Q_{u,v} into a
cyclotomic integer and reduces it exactly; ``fast`` diagonalizes the Gram
matrix and applies the rank/discriminant formula.  Everything is integer
arithmetic.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cycint import CycInt
from .errors import InternalInconsistency, NonIntegerSum, WrongParity, ZeroV
from .gf import FieldCtx, GFElem
from .quadform import (
    build_form,
    diagonalize,
    diagonalize_batch,
    form_basis,
    form_values,
    gram_batch,
    y_summed_gauss,
    y_summed_gauss_arr,
)

DIRECT_MAX_Q = 3**5

__all__ = [
    "CycInt",
    "DTable",
    "SValueDist",
    "d_direct",
    "d_fast",
    "d_values",
    "d_table",
    "d_matrix",
    "d_tallies",
    "s_value",
    "t_value",
    "s_distribution",
    "s_distribution_exhaustive",
    "d_tallies_closed_form",
    "s_distribution_closed_form",
    "zero_value_frequency",
    "value_set",
]


def peak(ctx: FieldCtx) -> int:
    """(p - 1) p^((m+1)/2), the nonzero magnitude of D(u, v) for v != 0."""
    return (ctx.p - 1) * ctx.p ** ((ctx.m + 1) // 2)


def d_direct(ctx: FieldCtx, u: GFElem, v: GFElem) -> int:
    p = ctx.p
    qvals = form_values(ctx, u, v)
    exps = (np.arange(1, p)[:, None] * qvals[None, :]) % p
    s = CycInt(tuple(np.bincount(exps.ravel(), minlength=p)), p)
    if not s.is_rational_integer():
        raise NonIntegerSum(f"D({u}, {v}) = {s}")
    return s.to_int()


def d_fast(ctx: FieldCtx, u: GFElem, v: GFElem) -> int:
    return y_summed_gauss(ctx, diagonalize(build_form(ctx, u, v)))


def _d_values_direct(ctx: FieldCtx, us: np.ndarray, v: GFElem) -> np.ndarray:
    p = ctx.p
    qvals = form_values(ctx, us, v)  # (len(us), q)
    counts = np.stack([(qvals == j).sum(axis=1) for j in range(p)], axis=1)
    # counts over y*Q mod p for y = 1..p-1
    total = np.zeros_like(counts)
    for y in range(1, p):
        total[:, (np.arange(p) * y) % p] += counts
    total -= total[:, -1:]
    if total[:, 1:].any():
        raise NonIntegerSum(f"irrational D value for v={v}")
    return total[:, 0]


def d_values(ctx: FieldCtx, v: GFElem, engine: str = "auto", basis=None) -> np.ndarray:
    """D(u, v) for every u in F_{p^m}, indexed by u.

    ``engine='auto'`` uses the direct tally when p^m <= 3^5 and the
    rank-based path otherwise.
    """
    if engine == "auto":
        engine = "direct" if ctx.q <= DIRECT_MAX_Q else "fast"
    us = np.arange(ctx.q, dtype=np.int64)
    if engine == "direct":
        return _d_values_direct(ctx, us, v)
    if engine != "fast":
        raise ValueError(f"unknown engine {engine!r}")
    if basis is None:
        basis = form_basis(ctx)
    mats = gram_batch(ctx, basis, us, np.full(ctx.q, v, dtype=np.int64))
    rank, disc = diagonalize_batch(mats, ctx.p)
    return y_summed_gauss_arr(ctx, rank, disc)


@dataclass(frozen=True, eq=False)
class DTable:
    v: GFElem
    values: np.ndarray
    n0: int
    n_plus: int
    n_minus: int

    @property
    def tallies(self) -> tuple[int, int, int]:
        return (self.n0, self.n_plus, self.n_minus)


def d_tallies_closed_form(p: int, m: int) -> tuple[int, int, int]:
    """Closed-form (n0, n+1, n-1) tallies of D(., v) for fixed v != 0."""
    h = (m - 1) // 2
    return (p**m - p ** (m - 1), (p ** (m - 1) + p**h) // 2, (p ** (m - 1) - p**h) // 2)


def d_table(ctx: FieldCtx, v: GFElem, engine: str = "fast", basis=None) -> DTable:
    if v == 0:
        raise ZeroV("d_table needs v != 0")
    vals = d_values(ctx, v, engine=engine, basis=basis)
    top = peak(ctx)
    n0 = int((vals == 0).sum())
    npl = int((vals == top).sum())
    nmi = int((vals == -top).sum())
    if n0 + npl + nmi != ctx.q:
        raise InternalInconsistency(f"D(., {v}) left the set {{0, +-{top}}}")
    vals.setflags(write=False)
    return DTable(v, vals, n0, npl, nmi)


def s_value(ctx: FieldCtx, a: GFElem, b: GFElem, c: GFElem, d=d_fast) -> int:
    if ctx.k % 2:
        raise WrongParity("S(a,b,c) is defined for even k; use t_value")
    return d(ctx, ctx.add(a, b), c) + d(ctx, ctx.sub(a, b), c)


def t_value(ctx: FieldCtx, a: GFElem, b: GFElem, c: GFElem, d=d_fast) -> int:
    if ctx.k % 2 == 0:
        raise WrongParity("T(a,b,c) is defined for odd k; use s_value")
    return d(ctx, ctx.add(a, b), c) + d(ctx, ctx.sub(a, b), ctx.neg(c))


def value_set(p: int, m: int) -> set[int]:
    """The seven possible values of S (or T)."""
    big = (p - 1) * p**m
    x = (p - 1) * p ** ((m + 1) // 2)
    return {0, big, 2 * big, x, -x, 2 * x, -2 * x}


@dataclass(frozen=True)
class SValueDist:
    p: int
    m: int
    freqs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.freqs)

    @property
    def total(self) -> int:
        return sum(f for _, f in self.freqs)


def _dist(p: int, m: int, counter) -> SValueDist:
    return SValueDist(p, m, tuple(sorted((int(k), int(v)) for k, v in counter.items() if v)))


def s_distribution_closed_form(p: int, m: int, neg2: str = "n_minus_sq") -> SValueDist:
    """Closed-form value distribution of S.

    The value -2(p-1)p^((m+1)/2) is counted as n_{-1}^2 (p^m - 1) by default;
    ``neg2='n_plus_sq'`` selects the alternative n_1^2 (p^m - 1), kept only so
    the two readings can be compared against enumeration.  The zero row is
    whatever is left of p^(3m).
    """
    q = p**m
    n0, n1, nm = d_tallies_closed_form(p, m)
    x = (p - 1) * p ** ((m + 1) // 2)
    rows = Counter()
    rows[2 * (p - 1) * q] += 1
    rows[(p - 1) * q] += 2 * (q - 1)
    rows[x] += 2 * n0 * n1 * (q - 1)
    rows[-x] += 2 * n0 * nm * (q - 1)
    rows[2 * x] += n1 * n1 * (q - 1)
    rows[-2 * x] += (nm if neg2 == "n_minus_sq" else n1) ** 2 * (q - 1)
    rows[0] += p ** (3 * m) - sum(rows.values())
    return _dist(p, m, rows)


def zero_value_frequency(p: int, m: int) -> int:
    """Closed-form frequency of S = 0, evaluated in exact rationals."""
    from fractions import Fraction

    v = (p**m - 1) * (
        Fraction(p ** (2 * m))
        + Fraction(3, 2) * p ** (2 * (m - 1))
        - 2 * p ** (2 * m - 1)
        + p**m
        - Fraction(1, 2) * p ** (m - 1)
        - 1
    )
    if v.denominator != 1:
        raise InternalInconsistency(f"non-integral zero-row frequency {v}")
    return int(v)


def _tally(vals: np.ndarray) -> Counter:
    keys, counts = np.unique(vals, return_counts=True)
    return Counter({int(k): int(c) for k, c in zip(keys, counts)})


def default_threads() -> int:
    env = os.environ.get("CYCLOTOME_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def d_tallies(ctx: FieldCtx, engine: str = "auto", threads: int | None = None) -> list[Counter]:
    """Value tallies of D(., c) for every c, indexed by c."""
    basis = form_basis(ctx)

    def work(c):
        return _tally(d_values(ctx, c, engine=engine, basis=basis))

    threads = threads or default_threads()
    if threads == 1:
        return [work(c) for c in ctx.elements()]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, ctx.elements()))


def s_distribution(ctx: FieldCtx, engine: str = "auto", threads: int | None = None) -> SValueDist:
    """Value distribution of S (k even) or T (k odd) over all of F_{p^m}^3.

    (a, b) -> (a + b, a - b) is a bijection of F_{p^m}^2 for odd p, so for
    each c the count of a value V is a convolution of the tallies of
    D(., c) and D(., c') with c' = c (S) or -c (T).
    """
    tallies = d_tallies(ctx, engine=engine, threads=threads)
    partner = np.arange(ctx.q) if ctx.k % 2 == 0 else ctx.neg_arr(np.arange(ctx.q))
    out: Counter = Counter()
    for c in ctx.elements():
        t1, t2 = tallies[c], tallies[int(partner[c])]
        for v1, f1 in t1.items():
            for v2, f2 in t2.items():
                out[v1 + v2] += f1 * f2
    return _dist(ctx.p, ctx.m, out)


def d_matrix(ctx: FieldCtx, engine: str = "auto") -> np.ndarray:
    """Full table D[u, v] over F_{p^m}^2."""
    basis = form_basis(ctx) if engine != "direct" else None
    return np.stack([d_values(ctx, v, engine=engine, basis=basis) for v in ctx.elements()], axis=1)


def s_distribution_exhaustive(ctx: FieldCtx, engine: str = "direct") -> SValueDist:
    """Value distribution by evaluating S or T at every triple (a, b, c).

    Only meant for small fields: the work is p^(3m) table lookups.
    """
    q = ctx.q
    dm = d_matrix(ctx, engine=engine)
    el = np.arange(q)
    a, b = np.meshgrid(el, el, indexing="ij")
    plus = ctx.add_arr(a.ravel(), b.ravel())
    minus = ctx.sub_arr(a.ravel(), b.ravel())
    c2 = el if ctx.k % 2 == 0 else ctx.neg_arr(el)
    out: Counter = Counter()
    for c in el:
        out.update(_tally(dm[plus, c] + dm[minus, c2[c]]))
    return _dist(ctx.p, ctx.m, out)
