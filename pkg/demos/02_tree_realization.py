"""Which hat-families come from trees, and what the trees look like.

Run: python3 demos/02_tree_realization.py
"""

from dissim import check_all, family, hat_vector, realize, to_dot

for values in [(1, 1, 1, "3/2"), (4, 4, 3, 2), (1, 1, 1, 1), (5, 1, 1, 1)]:
    f = family(*values)
    print(f"\nfamily {tuple(str(v) for v in f)}  slacks {[str(s) for s in f.slacks()]}")
    for cls, verdict in check_all(f).items():
        if not cls.startswith("tree-"):
            continue
        if not verdict:
            print(f"  {cls:<14} no: {verdict.violations[0]}")
            continue
        r = realize(f, cls)
        edges = {e: str(w) for e, w in r.graph.edges.items()}
        print(f"  {cls:<14} {r.construction}: {edges}")
        assert hat_vector(r.graph) == f

# A vanishing slack puts the tree's centre on a labelled vertex.
r = realize(family(1, 1, 1, "3/2"), "tree-exact")
print("\n" + "\n".join(r.trace))

# The caterpillar as Graphviz source; pipe into `dot -Tpng` to draw it.
print(to_dot(realize(family(6, 6, 6, 5, 4), "tree-exact").graph))
