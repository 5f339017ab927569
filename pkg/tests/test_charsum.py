import random
from collections import Counter

import numpy as np
import pytest

from cyclotome.charsum import (
    d_direct,
    d_fast,
    d_matrix,
    d_table,
    d_tallies_closed_form,
    d_values,
    peak,
    s_distribution,
    s_distribution_closed_form,
    s_distribution_exhaustive,
    s_value,
    t_value,
    value_set,
    zero_value_frequency,
)
from cyclotome.errors import WrongParity, ZeroV
from cyclotome.gf import FieldParams, build_field


def test_d_at_zero(ctx33, ctx53):
    for ctx in (ctx33, ctx53):
        p, m = ctx.p, ctx.m
        assert d_direct(ctx, 0, 0) == d_fast(ctx, 0, 0) == (p - 1) * p**m
        for u in range(1, ctx.q, 5):
            assert d_direct(ctx, u, 0) == 0


def test_d_table_example(ctx33):
    t = d_table(ctx33, ctx33.pi)
    assert peak(ctx33) == 18
    assert t.tallies == (18, 6, 3)
    assert set(t.values.tolist()) == {0, 18, -18}


@pytest.mark.parametrize("p, m, expected", [(3, 3, (18, 6, 3)), (3, 5, (162, 45, 36)), (5, 3, (100, 15, 10))])
def test_d_tallies_closed_form(p, m, expected):
    assert d_tallies_closed_form(p, m) == expected


@pytest.mark.parametrize("p, m", [(3, 3), (3, 5), (5, 3)])
def test_d_tallies_hold_for_every_v(p, m):
    ctx = build_field(FieldParams(p, m, 1 if m == 3 else 2))
    expected = d_tallies_closed_form(p, m)
    for v in range(1, ctx.q):
        assert d_table(ctx, v).tallies == expected


def test_d_table_rejects_zero(ctx33):
    with pytest.raises(ZeroV):
        d_table(ctx33, 0)


def test_fast_equals_direct_exhaustive(ctx33):
    direct = np.array([[d_direct(ctx33, u, v) for v in range(27)] for u in range(27)])
    fast = np.array([[d_fast(ctx33, u, v) for v in range(27)] for u in range(27)])
    assert (direct == fast).all()
    assert (d_matrix(ctx33, "direct") == direct).all()
    assert (d_matrix(ctx33, "fast") == direct).all()


@pytest.mark.parametrize("fixture", ["ctx35", "ctx53"])
def test_fast_equals_direct_sampled(fixture, request):
    ctx = request.getfixturevalue(fixture)
    rng = random.Random(5)
    for _ in range(500):
        u, v = rng.randrange(ctx.q), rng.randrange(ctx.q)
        assert d_fast(ctx, u, v) == d_direct(ctx, u, v)


@pytest.mark.parametrize("fixture", ["ctx33", "ctx35", "ctx53"])
def test_moment_identities(fixture, request):
    ctx = request.getfixturevalue(fixture)
    p, m = ctx.p, ctx.m
    rng = random.Random(2)
    for v in rng.sample(range(1, ctx.q), 10):
        vals = d_values(ctx, v)
        assert vals.sum() == (p - 1) * p**m
        # the value forced by the tallies; see test_acceptance for the published form
        assert (vals * vals).sum() == (p - 1) ** 2 * p ** (2 * m)


def test_s_and_t_parity_guards(ctx33, ctx33_k2):
    with pytest.raises(WrongParity):
        s_value(ctx33, 0, 0, 0)
    with pytest.raises(WrongParity):
        t_value(ctx33_k2, 0, 0, 0)


def test_s_value_cases(ctx33_k2):
    c = ctx33_k2
    p, m = 3, 3
    assert s_value(c, 0, 0, 0) == 2 * (p - 1) * p**m
    for a in (1, 5, 13):
        assert s_value(c, a, a, 0) == (p - 1) * p**m
        assert s_value(c, a, c.neg(a), 0) == (p - 1) * p**m
    assert t_value_zero_is_top()


def t_value_zero_is_top():
    ctx = build_field(FieldParams(3, 3, 1))
    return t_value(ctx, 0, 0, 0) == 108


def test_value_set_expansion():
    assert value_set(3, 3) == {0, 54, 108, 18, -18, 36, -36}


def test_s_values_lie_in_value_set(ctx33_k2, ctx33):
    allowed = value_set(3, 3)
    for ctx in (ctx33_k2, ctx33):
        dist = s_distribution_exhaustive(ctx)
        assert {v for v, _ in dist.freqs} <= allowed


def test_s_distribution_examples(ctx33):
    d = s_distribution(ctx33).as_dict()
    assert d[108] == 1
    assert d[54] == 2 * 26
    assert d[18] == 26 * 18 * 12 == 5616


@pytest.mark.parametrize("k", [1, 2])
def test_fast_distribution_matches_exhaustive(k):
    ctx = build_field(FieldParams(3, 3, k))
    exhaustive = s_distribution_exhaustive(ctx, engine="direct")
    assert s_distribution(ctx, engine="fast", threads=1) == exhaustive
    assert s_distribution(ctx, engine="direct", threads=2) == exhaustive
    assert exhaustive == s_distribution_closed_form(3, 3)


def test_t_distribution_equals_s_distribution(ctx33, ctx33_k2):
    assert s_distribution(ctx33) == s_distribution(ctx33_k2)


@pytest.mark.parametrize("p, m", [(3, 3), (3, 5), (3, 7), (5, 3), (7, 3)])
def test_closed_form_distribution(p, m):
    dist = s_distribution_closed_form(p, m)
    assert dist.total == p ** (3 * m)
    assert all(f >= 0 for _, f in dist.freqs)
    assert dist.as_dict()[0] == zero_value_frequency(p, m)


def test_alternative_neg2_reading_is_wrong(ctx33_k2):
    enumerated = s_distribution_exhaustive(ctx33_k2).as_dict()[-36]
    assert s_distribution_closed_form(3, 3).as_dict()[-36] == enumerated == 234
    assert s_distribution_closed_form(3, 3, neg2="n_plus_sq").as_dict()[-36] != enumerated


def test_weighted_sum_matches_direct_summation(ctx33_k2):
    dm = d_matrix(ctx33_k2, "direct")
    total = 0
    for a in range(27):
        for b in range(27):
            total += int(dm[ctx33_k2.add(a, b)].sum() + dm[ctx33_k2.sub(a, b)].sum())
    dist = s_distribution(ctx33_k2)
    assert sum(v * f for v, f in dist.freqs) == total
    assert dist.total == 3**9


@pytest.mark.parametrize("p, m", [(3, 3), (3, 5), (5, 3)])
def test_d_values_invariant_under_prime_field_scaling(p, m):
    # D(l u, l v) = D(u, v) for l in F_p^*: y l runs over F_p^* with y
    ctx = build_field(FieldParams(p, m, 1 if m == 3 else 2))
    lam = ctx.lam
    for v in (1, 4):
        vals = d_values(ctx, v)
        scaled = d_values(ctx, ctx.mul(lam, v))
        assert (scaled[ctx.mul_arr(lam, np.arange(ctx.q))] == vals).all()
