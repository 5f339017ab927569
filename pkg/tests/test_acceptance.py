"""Acceptance suite: one PASS/FAIL line per criterion, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
The moment criterion as stated (sum of squares = (p-1)p^(2m)) is known not to hold;
it is checked verbatim and fails.
"""

import random
import time
from itertools import islice

import numpy as np
import pytest

from cyclotome import charsum
from cyclotome.codes import (
    build_code,
    closed_form_weights,
    pless_first_moment,
    weight_dist_bruteforce,
    weight_dist_charsum,
    weight_dist_closed_form,
)
from cyclotome.gf import FieldParams, build_field, iter_primitive_polys, lambda_power_check
from cyclotome.quadform import diagonalize_batch, form_basis, gram_batch
from cyclotome.verify import PUBLISHED_3_3, PUBLISHED_3_5, PUBLISHED_3_7


def field(p, m, k=1, poly=None):
    return build_field(FieldParams(p, m, k, poly))


def enumerator_3_3():
    spec = build_code(field(3, 3, 1))
    t0 = time.perf_counter()
    brute = weight_dist_bruteforce(spec)
    t_brute = time.perf_counter() - t0
    t0 = time.perf_counter()
    others = [weight_dist_charsum(spec), weight_dist_closed_form(spec)]
    t_rest = time.perf_counter() - t0
    ok = all(d.as_dict() == PUBLISHED_3_3 for d in [brute] + others) and t_brute < 60 and t_rest < 2
    return ok, f"bruteforce {t_brute:.2f}s, others {t_rest:.2f}s"


def enumerator_3_7():
    spec = build_code(field(3, 7, 2))
    t0 = time.perf_counter()
    dists = [weight_dist_charsum(spec, engine="fast"), weight_dist_closed_form(spec)]
    elapsed = time.perf_counter() - t0
    ok = all(d.as_dict() == PUBLISHED_3_7 for d in dists) and elapsed < 300
    return ok, f"{elapsed:.1f}s"


def erratum_3_5():
    t0 = time.perf_counter()
    ok = True
    for k in (1, 2):
        spec = build_code(field(3, 5, k))
        for d in (weight_dist_charsum(spec), weight_dist_closed_form(spec)):
            ok &= d.as_dict()[153] == 3528360 and d.total == 3**15 == 14348907
    excess = sum(PUBLISHED_3_5.values()) - 3**15
    ok &= excess == 300000
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 30, f"printed coefficient overshoots by {excess}; {elapsed:.1f}s"


def d_tallies_every_v():
    bad = 0
    for p, m in ((3, 3), (3, 5)):
        ctx = field(p, m)
        basis = form_basis(ctx)
        expect = (p**m - p ** (m - 1), (p ** (m - 1) + p ** ((m - 1) // 2)) // 2, (p ** (m - 1) - p ** ((m - 1) // 2)) // 2)
        bad += sum(charsum.d_table(ctx, v, basis=basis).tallies != expect for v in range(1, ctx.q))
    return bad == 0, f"{bad} mismatching v"


def s_and_t_distributions():
    expected = charsum.s_distribution_closed_form(3, 3)
    got = [charsum.s_distribution_exhaustive(field(3, 3, k)) for k in (1, 2)]
    return all(g == expected for g in got), str(expected.freqs)


def oracle_equivalence():
    ctx = field(3, 3)
    direct = charsum.d_matrix(ctx, engine="direct")
    fast = np.array([[charsum.d_fast(ctx, u, v) for v in range(27)] for u in range(27)])
    bad = int((direct != fast).sum())
    rng = random.Random(0)
    for p, m in ((3, 5), (5, 3)):
        ctx = field(p, m)
        for _ in range(500):
            u, v = rng.randrange(ctx.q), rng.randrange(ctx.q)
            bad += charsum.d_fast(ctx, u, v) != charsum.d_direct(ctx, u, v)
    return bad == 0, f"{bad} mismatches"


def structural_guards():
    ok = True
    for p, m in ((3, 3), (5, 3), (3, 5)):
        d0 = charsum.d_values(field(p, m), 0)
        ok &= d0[0] == (p - 1) * p**m and not d0[1:].any()
    for m in (3, 5):
        ctx = field(3, m)
        us, vs = np.meshgrid(np.arange(ctx.q), np.arange(ctx.q), indexing="ij")
        rank, _ = diagonalize_batch(gram_batch(ctx, form_basis(ctx), us.ravel()[1:], vs.ravel()[1:]), 3)
        ok &= set(rank.tolist()) <= {m, m - 1, m - 2}
    for p in (3, 5):
        for k in (1, 2, 4, 5):
            m = 3 if k % 3 else 5
            ok &= lambda_power_check(field(p, m, k)) == (1 if k % 2 == 0 else -1)
    return bool(ok), ""


def moment_identities():
    rng = random.Random(0)
    first = second = True
    for p, m in ((3, 3), (3, 5), (5, 3)):
        ctx = field(p, m)
        basis = form_basis(ctx)
        for v in rng.sample(range(1, ctx.q), 10):
            vals = charsum.d_values(ctx, v, basis=basis)
            first &= int(vals.sum()) == (p - 1) * p**m
            second &= int((vals * vals).sum()) == (p - 1) * p ** (2 * m)
    pless = all(
        sum(w * f for w, f in closed_form_weights(p, m).items()) == pless_first_moment(p, m)
        for p, m in ((3, 3), (3, 5), (3, 7), (5, 3))
    )
    detail = f"sum D {'ok' if first else 'bad'}, sum D^2 = (p-1)p^(2m) {'ok' if second else 'bad'}, Pless {'ok' if pless else 'bad'}"
    return first and second and pless, detail


def code_structure():
    ok = True
    for p in (3, 5):
        polys = [f.coeffs for f in islice(iter_primitive_polys(p, 3), 2)]
        dists = {weight_dist_charsum(build_code(field(p, 3, k, poly))) for poly in polys for k in (1, 2)}
        ok &= len(dists) == 1
        (d,) = dists
        ok &= len(d.nonzero_weights) == 6 and d.min_distance == (p - 1) * p**2 // 2
    return ok, ""


CRITERIA = [
    ("enumerator at (3,3,1) from all three methods", enumerator_3_3),
    ("enumerator at (3,7,2) from charsum and closed form", enumerator_3_7),
    ("coefficient of z^153 at (3,5) and the printed-value overshoot", erratum_3_5),
    ("D(., v) tallies for every v != 0 at (3,3) and (3,5)", d_tallies_every_v),
    ("exhaustive S and T distributions at (3,3) vs closed form", s_and_t_distributions),
    ("d_fast = d_direct", oracle_equivalence),
    ("D(u,0) dichotomy, rank range, lambda-power sign", structural_guards),
    ("moment identities as stated", moment_identities),
    ("six weights, minimum weight, polynomial and parity independence", code_structure),
]


def _line(i, name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  [{i}] {name}" + (f"  ({detail})" if detail else "")


@pytest.mark.parametrize("i, name, fn", [(i, n, f) for i, (n, f) in enumerate(CRITERIA, 1)], ids=[f.__name__ for _, f in CRITERIA])
def test_criterion(i, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(i, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for i, (name, fn) in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(_line(i, name, ok, detail), flush=True)
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria met")
    raise SystemExit(1 if failures else 0)
