"""Realizing hat-families by positive-weighted trees.

Three settings, each with a checker and the matching constructions:

* ``tree-vertices``: a tree containing ``1..n`` among its vertices.
* ``tree-leaves``: a tree having ``1..n`` among its leaves.
* ``tree-exact``: a tree whose vertex set is exactly ``1..n``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotRealizable, PreconditionViolated
from .family import ConditionReport, DissimilarityFamily, Realization, Verdict, descending_order, finish
from .graph import WeightedGraph, format_rational

TREE_VERTICES = "tree-vertices"
TREE_LEAVES = "tree-leaves"
TREE_EXACT = "tree-exact"

_MODE_ALIASES = {
    "ge_n_vertices": TREE_VERTICES,
    "ge_n_leaves": TREE_LEAVES,
    "exact_n_vertices": TREE_EXACT,
}


def _fmt(q: Fraction) -> str:
    return format_rational(q)


def _slack_violations(report: ConditionReport, n: int, strict: bool) -> list[str]:
    out = []
    for i, s in enumerate(report.slacks, start=1):
        if s < 0 or (strict and s == 0):
            rel = "<" if strict else "<="
            out.append(f"(n-2)*D_{i} {rel} sum of the other values fails at label {i} (slack {_fmt(s)})")
    return out


def check_tree_ge_n(f: DissimilarityFamily) -> Verdict:
    report = ConditionReport.of(f)
    violations = _slack_violations(report, f.n, strict=False)
    eq = report.equality_indices
    if len(eq) > 1:
        violations.append(f"at most one slack may vanish; slack is zero at labels {eq}")
    return Verdict(TREE_VERTICES, not violations, violations, report)


def check_tree_leaves(f: DissimilarityFamily) -> Verdict:
    report = ConditionReport.of(f)
    violations = _slack_violations(report, f.n, strict=True)
    return Verdict(TREE_LEAVES, not violations, violations, report)


def check_tree_exact_n(f: DissimilarityFamily) -> Verdict:
    """Conditions (i)-(iii) for trees on exactly ``n`` vertices.

    Violation lines are prefixed with the failing condition so callers can
    tell (i) "slacks nonnegative, at most one zero", (ii) "a zero slack or a
    repeated maximum" and (iii) "maximum attained at most ``n - 2`` times"
    apart.
    """
    report = ConditionReport.of(f)
    violations = ["(i) " + v for v in check_tree_ge_n(f).violations]
    if not report.equality_indices and report.max_multiplicity < 2:
        violations.append("(ii) no slack vanishes and the maximum is attained only once")
    if report.max_multiplicity > f.n - 2:
        violations.append(f"(iii) maximum attained {report.max_multiplicity} times > n-2 = {f.n - 2}")
    return Verdict(TREE_EXACT, not violations, violations, report)


# -- constructions -------------------------------------------------------


def _star(f: DissimilarityFamily, center: int, skip: int | None) -> WeightedGraph:
    n = f.n
    slacks = f.slacks()
    edges = [(center, k, slacks[k - 1] / (n - 1)) for k in range(1, n + 1) if k != skip]
    verts = list(range(1, n + 1)) + ([center] if center > n else [])
    return WeightedGraph(verts, edges, range(1, n + 1))


def construct_star_center_new(f: DissimilarityFamily) -> Realization:
    """Star with a new center ``n + 1``; leaf ``k`` hangs at ``slack_k / (n - 1)``.

    Needs every slack strictly positive.
    """
    slacks = f.slacks()
    bad = [i for i, s in enumerate(slacks, start=1) if s <= 0]
    if bad:
        raise PreconditionViolated(f"star with a new center needs all slacks > 0; labels {bad} are not")
    n = f.n
    g = _star(f, n + 1, None)
    trace = [f"star with center {n + 1}", *(f"w({n + 1},{k}) = {_fmt(slacks[k - 1] / (n - 1))}" for k in range(1, n + 1))]
    return finish(g, f, list(range(1, n + 1)), "star-center-new", trace)


def construct_star_center_r(f: DissimilarityFamily, r: int | None = None) -> Realization:
    """Star centered at the unique label ``r`` whose slack vanishes."""
    slacks = f.slacks()
    zeros = [i for i, s in enumerate(slacks, start=1) if s == 0]
    if r is None:
        if len(zeros) != 1:
            raise PreconditionViolated(f"need exactly one vanishing slack, found labels {zeros}")
        r = zeros[0]
    if not 1 <= r <= f.n:
        raise PreconditionViolated(f"center label {r} out of range")
    if slacks[r - 1] != 0:
        raise PreconditionViolated(f"slack at label {r} is {_fmt(slacks[r - 1])}, not 0")
    bad = [i for i, s in enumerate(slacks, start=1) if i != r and s <= 0]
    if bad:
        raise PreconditionViolated(f"slacks at labels {bad} must be > 0")
    g = _star(f, r, r)
    n = f.n
    trace = [f"star with center {r}", *(f"w({r},{k}) = {_fmt(slacks[k - 1] / (n - 1))}" for k in range(1, n + 1) if k != r)]
    return finish(g, f, list(range(1, n + 1)), "star-center-r", trace)


def construct_caterpillar(f: DissimilarityFamily, s: int = 1) -> Realization:
    """Caterpillar on exactly ``n`` vertices for a repeated, strict maximum.

    After sorting (``D_1 = ... = D_h > D_{h+1} >= ...``) the ``h`` maximal
    labels form a path with equal edge weights; labels ``h+1..h+s`` hang off
    vertex 1 and the rest off vertex ``h``, each at ``D_1 - D_k``.
    """
    n = f.n
    if any(x <= 0 for x in f.slacks()):
        raise PreconditionViolated("caterpillar needs every slack > 0")
    order = descending_order(f)
    d = [f[i] for i in order]  # d[p-1] is the value at normalized label p
    top = d[0]
    h = f.max_multiplicity
    if h < 2:
        raise PreconditionViolated("caterpillar needs the maximum attained at least twice")
    if n - h < 2:
        raise PreconditionViolated(f"caterpillar needs at least two non-maximal values, have {n - h}")
    if not 1 <= s <= n - h - 1:
        raise PreconditionViolated(f"split size must be in 1..{n - h - 1}, got {s}")
    tail = sum(d[h:], Fraction(0))
    path_w = (tail - (n - h - 1) * top) / (h - 1)
    edges = [(p, p + 1, path_w) for p in range(1, h)]
    for p in range(h + 1, n + 1):
        anchor = 1 if p <= h + s else h
        edges.append((anchor, p, top - d[p - 1]))
    g = WeightedGraph(range(1, n + 1), edges, range(1, n + 1))
    trace = [
        f"normalized order {order}: h = {h} maximal values, split s = {s}",
        f"path 1..{h} with edges {_fmt(path_w)}",
        *(f"pendant {p} at {1 if p <= h + s else h} with weight {_fmt(top - d[p - 1])}" for p in range(h + 1, n + 1)),
    ]
    return finish(g, f, order, "caterpillar", trace)


# -- dispatcher ----------------------------------------------------------

CHECKS = {
    TREE_VERTICES: check_tree_ge_n,
    TREE_LEAVES: check_tree_leaves,
    TREE_EXACT: check_tree_exact_n,
}


def realize_tree(f: DissimilarityFamily, mode: str = TREE_VERTICES, split: int = 1) -> Realization:
    """Check ``f`` in the requested tree setting and build a verified witness."""
    mode = _MODE_ALIASES.get(mode, mode)
    if mode not in CHECKS:
        raise ValueError(f"unknown tree mode {mode!r}; expected one of {sorted(CHECKS)}")
    verdict = CHECKS[mode](f)
    if not verdict.passed:
        raise NotRealizable(verdict)
    report = verdict.report
    if report.equality_indices:
        return construct_star_center_r(f, report.equality_indices[0])
    if mode == TREE_EXACT:
        return construct_caterpillar(f, split)
    return construct_star_center_new(f)
