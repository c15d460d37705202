"""Minimum connected-subgraph weights on a small graph.

Run: python3 demos/01_steiner_weights.py
"""

from dissim import WeightedGraph, dissimilarity_vector, hat_vector, steiner_brute, steiner_weight

# A 4-cycle with one chord. Vertices 1..4 carry labels; weights are exact.
g = WeightedGraph(
    vertices=[1, 2, 3, 4],
    edges=[(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 1, 2), (1, 3, "5/2")],
    external=[1, 2, 3, 4],
)

# Connecting {1, 3}: both two-edge paths cost 3, so the chord (5/2) wins.
r = steiner_weight(g, {1, 3})
print("D{1,3} =", r.weight, "using", r.edges)

# The dynamic program and the brute-force oracle always agree.
for terminals in ({1, 2, 3}, {2, 4}, {1, 2, 3, 4}):
    fast, slow = steiner_weight(g, terminals), steiner_brute(g, terminals)
    print(sorted(terminals), fast.weight, slow.weight, fast.edges)

# All 3-subsets at once, then the hat-family (each entry leaves one label out).
print("k = 3:", {tuple(sorted(s)): str(v) for s, v in dissimilarity_vector(g, 3).entries.items()})
print("hat-family:", [str(v) for v in hat_vector(g)])
