"""Weight distribution of the length-26 ternary code, three ways."""
# %%
import time

from cyclotome import FieldParams, build_code, build_field, codeword, weight_of
from cyclotome.codes import cyclic_shift, is_codeword, weight_by_formula
from cyclotome import weight_dist_bruteforce, weight_dist_charsum, weight_dist_closed_form

spec = build_code(build_field(FieldParams(3, 3, 1)))
print(f"h(x) = {spec.h}")
print(f"length {spec.n}, dimension {spec.dim}")

# %% A codeword, its weight by counting and by the character-sum formula.
w = codeword(spec, 2, 11, 19)
print(w.symbols)
print("weight", weight_of(spec, w), "formula", weight_by_formula(spec, 2, 11, 19))
print("shift still in the code:", is_codeword(spec, cyclic_shift(w.symbols)))

# %% The three routes.
for name, fn in [("bruteforce", weight_dist_bruteforce), ("charsum", weight_dist_charsum), ("closedform", weight_dist_closed_form)]:
    t0 = time.perf_counter()
    wd = fn(spec)
    print(f"{name:11s} {time.perf_counter() - t0:6.3f}s  {wd.enumerator()}")

print(wd.to_csv())
