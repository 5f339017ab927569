"""The forms Q(x) = Tr(u x^2 + v x^(p^k + 1)) and their invariants."""
# %%
from collections import Counter

import numpy as np

from cyclotome import FieldParams, build_field, build_form, diagonalize, gauss_sum_closed_form, y_summed_gauss
from cyclotome.cycint import CycInt
from cyclotome.quadform import diagonalize_batch, form_basis, form_values, gram_batch

ctx = build_field(FieldParams(3, 3, 1))

# %% One form: its Gram matrix, rank and discriminant class.
q = build_form(ctx, u=1, v=ctx.pi)
print(q.matrix)
d = diagonalize(q)
print("rank", d.rank, "discriminant class", d.disc_class)

# %% The exponential sum of zeta^Q(x) by enumeration and in closed form.
values = form_values(ctx, 1, ctx.pi)
by_hand = CycInt.from_exponents(values, ctx.p)
print("enumerated:", by_hand)
print("closed form:", gauss_sum_closed_form(ctx, d))
print("summed over y in F_3^*:", y_summed_gauss(ctx, d))

# %% All 728 nonzero (u, v) at once: Gram matrices are linear in (u, v).
us, vs = np.meshgrid(np.arange(ctx.q), np.arange(ctx.q), indexing="ij")
mats = gram_batch(ctx, form_basis(ctx), us.ravel()[1:], vs.ravel()[1:])
rank, disc = diagonalize_batch(mats, ctx.p)
print("rank counts:", dict(sorted(Counter(rank.tolist()).items())))
