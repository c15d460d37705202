"""The five realization settings under one naming scheme."""

from __future__ import annotations

from .errors import WrongN
from .family import ConditionReport, DissimilarityFamily, Realization, Verdict
from .graphs import GRAPH_EXACT, GRAPH_N4_INTERNAL, check_graph_exact_n, check_n4_internal, realize_graph
from .trees import TREE_EXACT, TREE_LEAVES, TREE_VERTICES, check_tree_exact_n, check_tree_ge_n, check_tree_leaves, realize_tree

CLASSES = (TREE_VERTICES, TREE_LEAVES, TREE_EXACT, GRAPH_EXACT, GRAPH_N4_INTERNAL)

_CHECKERS = {
    TREE_VERTICES: check_tree_ge_n,
    TREE_LEAVES: check_tree_leaves,
    TREE_EXACT: check_tree_exact_n,
    GRAPH_EXACT: check_graph_exact_n,
    GRAPH_N4_INTERNAL: check_n4_internal,
}


def check_class(f: DissimilarityFamily, cls: str) -> Verdict:
    """Verdict for one setting; the ``n = 4`` setting fails (rather than raises) for other ``n``."""
    if cls not in _CHECKERS:
        raise ValueError(f"unknown class {cls!r}; expected one of {list(CLASSES)}")
    if cls == GRAPH_N4_INTERNAL and f.n != 4:
        return Verdict(cls, False, [f"only defined for n = 4, got n = {f.n}"], ConditionReport.of(f))
    return _CHECKERS[cls](f)


def check_all(f: DissimilarityFamily) -> dict[str, Verdict]:
    return {cls: check_class(f, cls) for cls in CLASSES}


def realize(f: DissimilarityFamily, cls: str, split: int = 1) -> Realization:
    if cls in (TREE_VERTICES, TREE_LEAVES, TREE_EXACT):
        return realize_tree(f, cls, split=split)
    if cls == GRAPH_N4_INTERNAL and f.n != 4:
        raise WrongN(f"{cls} needs n = 4, got n = {f.n}")
    if cls in (GRAPH_EXACT, GRAPH_N4_INTERNAL):
        return realize_graph(f, cls)
    raise ValueError(f"unknown class {cls!r}; expected one of {list(CLASSES)}")
