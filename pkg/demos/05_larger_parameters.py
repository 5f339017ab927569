"""Length 242 and 2186: closed form against the rank-based sum route.

The (3, 7) run diagonalizes about 4.8 million forms and takes ~40 s.
Pass --quick to stop after (3, 5).
"""
# %%
import sys
import time

from cyclotome import FieldParams, build_code, build_field, weight_dist_charsum, weight_dist_closed_form
from cyclotome.codes import pless_first_moment

runs = [(3, 5, 2)] if "--quick" in sys.argv else [(3, 5, 2), (3, 7, 2)]
for p, m, k in runs:
    spec = build_code(build_field(FieldParams(p, m, k)))
    t0 = time.perf_counter()
    fast = weight_dist_charsum(spec, engine="fast")
    elapsed = time.perf_counter() - t0
    closed = weight_dist_closed_form(spec)
    print(f"({p},{m},{k}) in {elapsed:.1f}s, agree={fast == closed}")
    print("  ", fast.enumerator())
    print("   total", fast.total, "= 3^%d" % (3 * m), " first moment ok:", fast.first_moment() == pless_first_moment(p, m))

# %% At (3, 5) the z^153 coefficient is 3528360; 3828360 would overshoot 3^15 by 300000.
d = weight_dist_closed_form(build_code(build_field(FieldParams(3, 5, 1)))).as_dict()
print("A_153 =", d[153], " total with 3828360 instead:", sum(d.values()) - d[153] + 3828360 - 3**15, "over")
