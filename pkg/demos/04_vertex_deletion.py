"""
How fragile is perfect state transfer?
======================================

Deleting one vertex from a graph with perfect transfer breaks it. This
script compares analytic ceilings on the surviving amplitude with what a
dense time scan actually observes.
"""

# %%
# A cosine max-min identity
# -------------------------
# The bounds rest on the largest value the smallest of three cosines can take.
import math

from threshold_qw.nodes import (
    last_block_deletion_direct,
    last_block_deletion_modulus,
    lemma_cos_maxmin,
    node_deletion_bound,
)

for a in (3, 5, 7, 9):
    r = lemma_cos_maxmin(a)
    print(f"a = {a}: grid {r.value:.6f}  cos(pi/a) {r.analytic:.6f}")

# %%
# Bounds for each deleted block
# -----------------------------
form = (2, 6, 4, 4)
for l in range(1, len(form) + 1):
    b = node_deletion_bound(form, l, grid_step=1e-3)
    print(f"delete from block {l}: case {b.case}, bound {b.bound:.5f}, observed {b.grid_max_observed:.5f}")

# %%
# Deleting from the last block
# ----------------------------
# Here the amplitude at pi/2 has a closed form that tends to one as the graph
# grows, so large graphs are more forgiving.
for m in (2, 6, 10, 50, 250):
    closed = last_block_deletion_modulus((2, m))
    direct = last_block_deletion_direct((2, m))
    print(f"(2,{m}): {closed:.6f} (direct {direct:.6f}), 1 - value = {1 - closed:.2e}")
print("sqrt(37)/7 =", math.sqrt(37) / 7)
