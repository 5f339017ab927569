"""Building F_27 and looking around inside it."""
# %%
from cyclotome import FieldParams, build_field, minimal_poly
from cyclotome.gf import cyclotomic_coset, iter_primitive_polys

ctx = build_field(FieldParams(p=3, m=3, k=1))
print("defining polynomial:", ctx.poly)
print("smallest nonsquare in F_3:", ctx.lam)

# %% Elements are ints; their base-3 digits are polynomial-basis coordinates.
a, b = 5, 17
print(f"{a} -> {ctx.coords(a)}, {b} -> {ctx.coords(b)}")
print("a + b =", ctx.add(a, b), " a * b =", ctx.mul(a, b), " a^-1 =", ctx.inv(a))
print("a * a^-1 =", ctx.mul(a, ctx.inv(a)))

# %% The trace is F_3-linear and hits every value equally often.
import numpy as np

tr = ctx.trace_arr(np.arange(ctx.q))
print("trace value counts:", np.bincount(tr, minlength=3))

# %% Powers of the primitive element and the cyclotomic coset of pi.
print("pi^0..pi^5:", [ctx.pi_pow(t) for t in range(6)])
print("conjugates of pi:", cyclotomic_coset(ctx, ctx.pi))
print("minimal polynomial of pi:", minimal_poly(ctx, ctx.pi))
print("minimal polynomial of -pi:", minimal_poly(ctx, ctx.neg(ctx.pi)))

# %% Other primitive cubics over F_3, in search order.
for f in iter_primitive_polys(3, 3):
    print("  ", f)
