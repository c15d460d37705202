"""Graphs on exactly the labelled vertices.

Run: python3 demos/03_graph_realization.py
"""

from dissim import check_graph_exact_n, family, hat_vector, realize_graph

# A repeated maximum: the top labels form a clique, the rest hang off two of them.
r = realize_graph(family(4, 4, 4, 3, 3))
print(r.construction, {e: str(w) for e, w in r.graph.edges.items()})

# A unique maximum: peel off a pendant edge until four labels remain.
r = realize_graph(family(10, 7, 8, 9, 9))
for level in r.induction:
    if level.reduced is None:
        print(f"n={level.n} order={level.order}: four-vertex base")
    else:
        print(f"n={level.n} order={level.order} pendant x={level.x} reduced={[str(v) for v in level.reduced]}")
print({e: str(w) for e, w in r.graph.edges.items()})
assert hat_vector(r.graph) == family(10, 7, 8, 9, 9)

# Two maxima whose slack vanishes: no graph on four vertices works.
v = check_graph_exact_n(family(6, 6, 4, 2))
print(v.passed, v.violations)
