"""
Finding missing links with a quantum walk
=========================================

Take the complete graph on ``n = 4m`` vertices and remove one edge, or a
matching. At ``t = pi/2`` the walk swaps the two ends of each missing edge and
leaves every other vertex in place, so a single measurement tells whether the
start vertex touches a missing edge.
"""

# %%
# The swap at pi/2
# ----------------
import numpy as np

from threshold_qw.links import (
    detect_missing_edge,
    detect_missing_matching,
    measurement_distribution,
    step_budgets,
)

n = 8
print(np.round(measurement_distribution(n, [(3, 7)], 3, np.pi / 2), 12))
print(np.round(measurement_distribution(n, [(3, 7)], 1, np.pi / 2), 12))

# %%
# Hunting a single edge
# ---------------------
transcript = detect_missing_edge(n, (3, 7), seed=0)
for step in transcript.steps:
    print(f"start {step.start}: measured {step.measured} ({step.outcome})")
print("found:", transcript.found_edges, "evolutions:", transcript.evolutions_used)

# %%
# Hunting a perfect matching
# --------------------------
hidden = [(1, 5), (2, 8), (3, 6), (4, 7)]
transcript = detect_missing_matching(n, hidden, known_size=n // 2, seed=1)
print("found:", transcript.found_edges, "evolutions:", transcript.evolutions_used)

# %%
# Quantum versus classical budgets
# --------------------------------
for size in (8, 16, 32, 64):
    print(size, step_budgets(size))
