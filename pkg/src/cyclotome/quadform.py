"""Quadratic forms Q_{u,v}(x) = Tr(u x^2 + v x^(p^k + 1)) over F_p.

A form in m variables is stored as its symmetric Gram matrix A with
Q(x) = X A X^T, X the coordinate row vector of x.  Rank and the Legendre
class of the discriminant are obtained by congruence diagonalization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycint import CycInt, quadratic_gauss_sum
from .gf import FieldCtx, GFElem, legendre_int


@dataclass(frozen=True, eq=False)
class QuadForm:
    matrix: np.ndarray
    u: GFElem
    v: GFElem
    p: int

    def __call__(self, coords) -> int:
        x = np.asarray(coords, dtype=np.int64)
        return int(x @ self.matrix @ x) % self.p

    def is_symmetric(self) -> bool:
        return bool((self.matrix == self.matrix.T).all())


@dataclass(frozen=True)
class DiagResult:
    rank: int
    disc_class: int


def form_exponent(ctx: FieldCtx) -> int:
    return ctx.p**ctx.k + 1


def form_value(ctx: FieldCtx, u: GFElem, v: GFElem, x: GFElem) -> int:
    """Q_{u,v}(x) evaluated through field arithmetic and the trace."""
    y = ctx.add(ctx.mul(u, ctx.mul(x, x)), ctx.mul(v, ctx.pow(x, form_exponent(ctx))))
    return ctx.trace(y)


def form_values(ctx: FieldCtx, u, v) -> np.ndarray:
    """Q_{u,v}(x) for every x in F_{p^m} (vectorized, broadcasting over u, v).

    Shape is ``broadcast(u, v).shape + (q,)``.
    """
    x = np.arange(ctx.q, dtype=np.int64)
    sq = ctx.pow_arr(x, 2)
    hi = ctx.pow_arr(x, form_exponent(ctx))
    u = np.asarray(u, dtype=np.int64)[..., None]
    v = np.asarray(v, dtype=np.int64)[..., None]
    # trace is additive, so Tr(u x^2 + v x^e) = Tr(u x^2) + Tr(v x^e)
    return (ctx.trace_arr(ctx.mul_arr(u, sq)) + ctx.trace_arr(ctx.mul_arr(v, hi))) % ctx.p


def _gram(ctx: FieldCtx, u: GFElem, v: GFElem) -> np.ndarray:
    p, m = ctx.p, ctx.m
    inv2 = pow(2, -1, p)
    eps = ctx.basis
    diag = [form_value(ctx, u, v, e) for e in eps]
    a = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        a[i, i] = diag[i]
        for j in range(i + 1, m):
            s = form_value(ctx, u, v, ctx.add(eps[i], eps[j]))
            a[i, j] = a[j, i] = (s - diag[i] - diag[j]) * inv2 % p
    return a


def build_form(ctx: FieldCtx, u: GFElem, v: GFElem) -> QuadForm:
    a = _gram(ctx, u, v)
    a.setflags(write=False)
    return QuadForm(a, u, v, ctx.p)


def form_basis(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    """Gram matrices of Q_{e_i,0} and Q_{0,e_i} for the basis vectors e_i.

    Q_{u,v} is F_p-linear in (u, v), so any Gram matrix is the
    coordinate-weighted sum of these.
    """
    us = np.stack([_gram(ctx, e, 0) for e in ctx.basis])
    vs = np.stack([_gram(ctx, 0, e) for e in ctx.basis])
    return us, vs


def gram_batch(ctx: FieldCtx, basis, u, v) -> np.ndarray:
    """Gram matrices for arrays u, v (same shape) of field elements."""
    bu, bv = basis
    du = ctx.digits[np.asarray(u, dtype=np.int64)]
    dv = ctx.digits[np.asarray(v, dtype=np.int64)]
    return (np.einsum("ni,ijk->njk", du, bu) + np.einsum("ni,ijk->njk", dv, bv)) % ctx.p


def diagonalize_matrix(matrix, p: int) -> DiagResult:
    """Symmetric congruence reduction with the textbook pivot rule.

    At step i: use A[i][i] if nonzero; else swap in a later nonzero diagonal
    entry; else add row/column j into i for some A[i][j] != 0 (making the
    pivot 2*A[i][j], nonzero in odd characteristic); else skip the zero row.
    """
    a = [[int(x) % p for x in row] for row in matrix]
    m = len(a)
    pivots = []
    for i in range(m):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, m) if a[j][j]), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, m) if a[i][j]), None)
                if j is None:
                    continue
                for c in range(m):
                    a[i][c] = (a[i][c] + a[j][c]) % p
                for r in range(m):
                    a[r][i] = (a[r][i] + a[r][j]) % p
        d = a[i][i]
        pivots.append(d)
        inv = pow(d, -1, p)
        for r in range(i + 1, m):
            f = a[r][i] * inv % p
            if f:
                for c in range(i, m):
                    a[r][c] = (a[r][c] - f * a[i][c]) % p
                for c in range(i, m):
                    a[c][r] = a[r][c]
    # after elimination row/col i is orthogonal to every later index
    disc = 1
    for d in pivots:
        disc = disc * d % p
    return DiagResult(len(pivots), legendre_int(disc, p) if pivots else 0)


def diagonalize(q: QuadForm) -> DiagResult:
    return diagonalize_matrix(q.matrix, q.p)


def diagonalize_batch(mats, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Rank and discriminant class for a stack of symmetric matrices.

    Each step picks a nonzero diagonal entry A[j][j] (first creating one via
    e_j <- e_j + e_l when the diagonal vanishes but the matrix does not) and
    subtracts the rank-one congruence update that clears row and column j.
    Matrices keep their full size; cleared rows simply stay zero.
    """
    a = np.array(mats, dtype=np.int64) % p
    n, m, _ = a.shape
    inv_table = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    leg_table = np.array([legendre_int(x, p) for x in range(p)], dtype=np.int64)
    rank = np.zeros(n, dtype=np.int64)
    disc = np.ones(n, dtype=np.int64)
    rows = np.arange(n)
    for _ in range(m):
        nz = np.einsum("nii->ni", a) != 0
        need = ~nz.any(axis=1)
        if need.any():
            need &= a.reshape(n, -1).any(axis=1)
            if need.any():
                sub = a[need]
                r = np.arange(len(sub))
                j, l = np.divmod((sub != 0).reshape(len(sub), -1).argmax(axis=1), m)
                sub[r, j, :] += sub[r, l, :]
                sub[r, :, j] += sub[r, :, l]
                a[need] = sub % p
                nz = np.einsum("nii->ni", a) != 0
        j = nz.argmax(axis=1)
        col = a[rows, :, j]
        d = col[rows, j]
        piv = d != 0
        if not piv.any():
            break
        rank += piv
        disc = np.where(piv, disc * d % p, disc)
        scaled = col * inv_table[d][:, None]
        a = (a - scaled[:, :, None] * col[:, None, :]) % p
    disc_class = np.where(rank == 0, 0, leg_table[disc])
    return rank, disc_class


def gauss_sum_closed_form(ctx: FieldCtx, d: DiagResult) -> CycInt:
    """sum over x in F_p^m of zeta**F(x) for a form with the given invariants.

    Diagonalizing F to sum d_i z_i^2 gives a product of r one-variable sums
    eta(d_i) * g with g the quadratic Gauss sum, times p^(m-r) from the free
    variables: eta(Delta) * g^r * p^(m-r).  Since g = sqrt(p) for p = 1 mod 4
    and g = i*sqrt(p) for p = 3 mod 4 this is the usual
    eta(Delta) * (i)^r * p^(m - r/2) form, with the branch of i fixed by g.
    """
    p, m, r = ctx.p, ctx.m, d.rank
    if r == 0:
        return CycInt.integer(p**m, p)
    g = quadratic_gauss_sum(p)
    return (g**r) * (d.disc_class * p ** (m - r))


def y_summed_gauss(ctx: FieldCtx, d: DiagResult) -> int:
    """sum over y in F_p^*, x of zeta**(y F(x)) as an integer."""
    p, m, r = ctx.p, ctx.m, d.rank
    if r == 0:
        return (p - 1) * p**m
    if r % 2:
        return 0
    eps = d.disc_class * (1 if p % 4 == 1 else (-1) ** (r // 2))
    return eps * (p - 1) * p ** (m - r // 2)


def y_summed_gauss_arr(ctx: FieldCtx, rank: np.ndarray, disc_class: np.ndarray) -> np.ndarray:
    p, m = ctx.p, ctx.m
    half = rank // 2
    sign = disc_class * (1 if p % 4 == 1 else np.where(half % 2, -1, 1))
    mag = (p - 1) * p ** (m - half)
    out = np.where(rank % 2 == 1, 0, sign * mag)
    return np.where(rank == 0, (p - 1) * p**m, out).astype(np.int64)
