"""The sums D(u, v) and the S / T value distribution."""
# %%
from cyclotome import FieldParams, build_field, d_direct, d_fast, d_table, s_distribution
from cyclotome.charsum import d_tallies_closed_form, s_distribution_closed_form, value_set

ctx = build_field(FieldParams(3, 3, 2))

# %% Two ways to get D: tallying zeta exponents exactly, or from the form's rank.
for u, v in [(0, 0), (4, 0), (1, 5), (2, 5), (6, 5)]:
    print(f"D({u},{v}) direct={d_direct(ctx, u, v)} fast={d_fast(ctx, u, v)}")

# %% For fixed v != 0 the values of D(., v) have a fixed shape.
t = d_table(ctx, v=5)
print("(zeros, +peak, -peak):", t.tallies, "expected", d_tallies_closed_form(3, 3))

# %% Distribution of S(a, b, c) over all 3^9 triples.
dist = s_distribution(ctx)
print("possible values:", sorted(value_set(3, 3)))
for value, freq in dist.freqs:
    print(f"  S = {value:4d}: {freq}")
print("matches closed form:", dist == s_distribution_closed_form(3, 3))
