"""A family that needs hidden vertices.

(5, 5, 6, 41/5) has a negative slack at label 4, so no graph on just the
four labels realizes it. Three extra vertices are enough.

Run: python3 demos/04_internal_vertices.py
"""

from dissim import check_graph_exact_n, check_n4_internal, family, hat_vector_brute, realize

f = family(5, 5, 6, "41/5")
print("exact-n:", check_graph_exact_n(f).violations)

v = check_n4_internal(f)
tightest = min(v.report.weighted_slacks.items(), key=lambda kv: kv[1])
print("weighted condition holds; tightest (t, k, j, i) =", tightest[0], "slack", tightest[1])

r = realize(f, "graph-n4-internal")
print("internal vertices:", r.internal_vertices)
for (u, w), weight in r.graph.edges.items():
    print(f"  {u} -- {w}: {weight}")

# The slow oracle reproduces the family exactly.
print("brute force:", [str(x) for x in hat_vector_brute(r.graph)])
