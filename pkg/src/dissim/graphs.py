"""Realizing hat-families by positive-weighted graphs.

``graph-exact``: graphs whose vertex set is exactly ``1..n``.
``graph-n4-internal``: ``n = 4`` with any number of extra internal vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotRealizable, PreconditionViolated, WrongN
from .family import ConditionReport, DissimilarityFamily, Realization, Verdict, descending_order, finish
from .graph import WeightedGraph, format_rational

GRAPH_EXACT = "graph-exact"
GRAPH_N4_INTERNAL = "graph-n4-internal"

_MODE_ALIASES = {"exact_n": GRAPH_EXACT, "n4_internal": GRAPH_N4_INTERNAL}

_fmt = format_rational


@dataclass
class GraphConditionReport(ConditionReport):
    strict: bool = False
    # n = 4 only: (t, k, j, i) -> 3D_k + 3D_j + 2D_i - 5D_t
    weighted_slacks: dict = field(default_factory=dict)
    # n = 4 only: (i, j, k) -> D_j + D_k - D_i, with j < k
    triangle_slacks: dict = field(default_factory=dict)


def check_graph_exact_n(f: DissimilarityFamily) -> Verdict:
    base = ConditionReport.of(f)
    report = GraphConditionReport(base.slacks, base.max_value, base.max_multiplicity, strict=all(s > 0 for s in base.slacks))
    violations = []
    for i, s in enumerate(report.slacks, start=1):
        if s < 0:
            violations.append(f"(i) (n-2)*D_{i} <= sum of the other values fails (slack {_fmt(s)})")
    if report.max_multiplicity >= 2 and not report.strict:
        eq = report.equality_indices
        violations.append(f"(ii) maximum attained {report.max_multiplicity} times but slack vanishes at labels {eq}")
    return Verdict(GRAPH_EXACT, not violations, violations, report)


def implied_inequalities(f: DissimilarityFamily, k: int) -> bool:
    """``k * D_i <= sum of D_j`` over every ``k + 1`` labels ``j`` other than ``i``."""
    n = f.n
    if not 1 <= k <= n - 2:
        raise ValueError(f"k must lie in 1..{n - 2}, got {k}")
    for i in range(1, n + 1):
        rest = sorted(f[j] for j in range(1, n + 1) if j != i)
        # the smallest k+1 values give the tightest sum
        if k * f[i] > sum(rest[: k + 1], Fraction(0)):
            return False
    return True


def check_n4_internal(f: DissimilarityFamily) -> Verdict:
    if f.n != 4:
        raise WrongN(f"the internal-vertex characterization needs n = 4, got n = {f.n}")
    base = ConditionReport.of(f)
    report = GraphConditionReport(base.slacks, base.max_value, base.max_multiplicity, strict=all(s > 0 for s in base.slacks))
    violations = []
    for t, k, j, i in itertools.permutations(range(1, 5)):
        val = 3 * f[k] + 3 * f[j] + 2 * f[i] - 5 * f[t]
        report.weighted_slacks[(t, k, j, i)] = val
        if val < 0 and k < j:
            violations.append(f"(i) 5*D_{t} <= 3*D_{k} + 3*D_{j} + 2*D_{i} fails (slack {_fmt(val)})")
    for i in range(1, 5):
        for j, k in itertools.combinations([x for x in range(1, 5) if x != i], 2):
            val = f[j] + f[k] - f[i]
            report.triangle_slacks[(i, j, k)] = val
            if val <= 0:
                violations.append(f"(ii) D_{i} < D_{j} + D_{k} fails (slack {_fmt(val)})")
    return Verdict(GRAPH_N4_INTERNAL, not violations, violations, report)


# -- constructions for exactly n vertices --------------------------------


def construct_triangle(f: DissimilarityFamily) -> Realization:
    if f.n != 3:
        raise PreconditionViolated(f"triangle construction needs n = 3, got {f.n}")
    v = check_graph_exact_n(f)
    if not v.passed:
        raise PreconditionViolated("; ".join(v.violations))
    g = WeightedGraph([1, 2, 3], [(1, 2, f[3]), (1, 3, f[2]), (2, 3, f[1])], [1, 2, 3])
    return finish(g, f, [1, 2, 3], "triangle", ["triangle: w(i,j) = D_k for {i,j,k} = {1,2,3}"])


def construct_repeated_max(f: DissimilarityFamily) -> Realization:
    """Complete graph on the ``k`` maximal labels plus two spokes per other label."""
    n = f.n
    if n < 4:
        raise PreconditionViolated(f"repeated-maximum construction needs n >= 4, got {n}")
    k = f.max_multiplicity
    if k < 2:
        raise PreconditionViolated("the maximum is attained only once")
    if any(s <= 0 for s in f.slacks()):
        raise PreconditionViolated("a repeated maximum needs every slack > 0")
    order = descending_order(f)
    d = [f[i] for i in order]
    top = d[0]
    tail = sum(d[k:], Fraction(0))
    a = (tail - (n - k - 1) * top) / (n - 2)
    xs = {p: tail / (n - 2) + Fraction(k - 1, n - 2) * top - d[p - 1] for p in range(k + 1, n + 1)}
    if a <= 0 or any(a > x for x in xs.values()):
        raise PreconditionViolated(f"need 0 < a <= x_i; a = {_fmt(a)}, x = {[_fmt(x) for x in xs.values()]}")
    edges = [(p, q, a) for p, q in itertools.combinations(range(1, k + 1), 2)]
    for p, x in xs.items():
        edges.append((1, p, x))
        edges.append((k, p, x))
    g = WeightedGraph(range(1, n + 1), edges, range(1, n + 1))
    trace = [
        f"normalized order {order}: maximum attained k = {k} times",
        f"complete graph on 1..{k} with a = {_fmt(a)}",
        *(f"vertex {p} joined to 1 and {k} with x = {_fmt(x)}" for p, x in xs.items()),
    ]
    return finish(g, f, order, "repeated-max", trace)


@dataclass
class InductionLevel:
    n: int
    order: list  # original labels in normalized position
    x: Fraction | None
    reduced: tuple | None


def _unique_max_order(labels: list[int], value: dict) -> list[int]:
    """Role assignment for one level of the unique-maximum induction.

    Position 1 takes the maximum.  Above ``n = 4`` the last position takes a
    second-largest value.  At ``n = 4`` the roles are max, third, second,
    smallest, which gives ``D_3 >= D_2``.  Ties go to the smaller label.
    """
    desc = sorted(labels, key=lambda i: (-value[i], i))
    if len(desc) == 4:
        return [desc[0], desc[2], desc[1], desc[3]]
    return [desc[0]] + desc[2:] + [desc[1]]


def _unique_max_edges(labels: list[int], value: dict, levels: list[InductionLevel]) -> list:
    m = len(labels)
    order = _unique_max_order(labels, value)
    one, last = order[0], order[-1]
    d = {p: value[order[p - 1]] for p in range(1, m + 1)}
    if not all(d[1] > d[p] for p in range(2, m + 1)):
        raise PreconditionViolated("maximum is not unique")
    if m == 4:
        # solved from D_1 = w14 + w13 + w23, D_2 = w14 + w13, D_3 = w14 + w12, D_4 = w13 + w23
        w23 = d[1] - d[2]
        w13 = d[2] + d[4] - d[1]
        w14 = d[1] - d[4]
        w12 = d[3] + d[4] - d[1]
        if min(w23, w13, w14, w12) <= 0:
            raise PreconditionViolated("base-case weights are not all positive")
        if not (w23 <= w12 and w13 <= w12 and w13 + w23 >= w12 and w12 + w23 >= w13):
            raise PreconditionViolated("base-case weights break the required path comparisons")
        levels.append(InductionLevel(4, order, None, None))
        o = order
        return [(o[1], o[2], w23), (o[0], o[2], w13), (o[0], o[3], w14), (o[0], o[1], w12)]
    x = d[1] - d[m]
    reduced = {one: d[m]}
    for p in range(2, m):
        reduced[order[p - 1]] = d[p] - x
    if any(v <= 0 for v in reduced.values()):
        raise PreconditionViolated("reduced family is not positive")
    levels.append(InductionLevel(m, order, x, tuple(reduced[i] for i in order[:-1])))
    edges = _unique_max_edges(order[:-1], reduced, levels)
    edges.append((one, last, x))
    return edges


def construct_unique_max(f: DissimilarityFamily) -> Realization:
    """Induction on ``n``: peel a pendant edge off the maximal label down to ``n = 4``.

    At each level ``x = D_max - D_second`` becomes the pendant weight and the
    remaining values drop by ``x`` (the old maximum becomes ``D_second``).
    """
    n = f.n
    if n < 4:
        raise PreconditionViolated(f"unique-maximum construction needs n >= 4, got {n}")
    if f.max_multiplicity != 1:
        raise PreconditionViolated("maximum is not unique")
    neg = [i for i, s in enumerate(f.slacks(), start=1) if s < 0]
    if neg:
        raise PreconditionViolated(f"negative slack at labels {neg}")
    value = {i: f[i] for i in range(1, n + 1)}
    levels: list[InductionLevel] = []
    edges = _unique_max_edges(list(range(1, n + 1)), value, levels)
    g = WeightedGraph(range(1, n + 1), edges, range(1, n + 1))
    trace = []
    for lv in levels:
        if lv.x is None:
            trace.append(f"base n = 4 with roles {lv.order}")
        else:
            trace.append(f"n = {lv.n}, roles {lv.order}: pendant {lv.order[-1]} at {lv.order[0]} with x = {_fmt(lv.x)}, reduced {[_fmt(v) for v in lv.reduced]}")
    order = levels[0].order
    # graph already carries original labels, so the role map is the identity here
    r = finish(g, f, list(range(1, n + 1)), "unique-max", trace)
    r.permutation = list(order)
    r.induction = levels
    return r


# -- n = 4 with internal vertices ----------------------------------------


def construct_n4_internal(f: DissimilarityFamily) -> Realization:
    """Seven-vertex witness: hub 4 joined to P1, P2, P3 (ids 5, 6, 7) at ``h``;
    label ``i`` joined to ``P_j`` (``j != i``) at ``r_i``.

    Labels are first sorted so that ``D_4 >= D_3 >= D_2 >= D_1``.
    """
    v = check_n4_internal(f)
    if not v.passed:
        raise PreconditionViolated("; ".join(v.violations))
    order = sorted(range(1, 5), key=lambda i: (f[i], i))
    d1, d2, d3, d4 = (f[i] for i in order)
    h = (d1 + d2 - d4) / 2
    r = {
        1: (d4 + d2 + 2 * d3 - 3 * d1) / 4,
        2: (d4 + d1 + 2 * d3 - 3 * d2) / 4,
        3: (d4 + d1 + d2 - 2 * d3) / 4,
    }
    if h <= 0 or min(r.values()) <= 0:
        raise PreconditionViolated("h and r_i must be positive")
    if 2 * h < r[3]:
        raise PreconditionViolated("need 2h >= r_3")
    hub = {1: 5, 2: 6, 3: 7}
    edges = [(4, hub[i], h) for i in (1, 2, 3)]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if j != i:
                edges.append((i, hub[j], r[i]))
    g = WeightedGraph(range(1, 8), edges, range(1, 5))
    trace = [
        f"normalized order {order} (ascending values)",
        f"h = {_fmt(h)}, r_1 = {_fmt(r[1])}, r_2 = {_fmt(r[2])}, r_3 = {_fmt(r[3])}",
        "internal vertices 5, 6, 7",
    ]
    return finish(g, f, order, "n4-internal", trace)


# -- dispatcher ----------------------------------------------------------


def realize_graph(f: DissimilarityFamily, mode: str = GRAPH_EXACT) -> Realization:
    mode = _MODE_ALIASES.get(mode, mode)
    if mode == GRAPH_N4_INTERNAL:
        verdict = check_n4_internal(f)
        if not verdict.passed:
            raise NotRealizable(verdict)
        return construct_n4_internal(f)
    if mode != GRAPH_EXACT:
        raise ValueError(f"unknown graph mode {mode!r}")
    verdict = check_graph_exact_n(f)
    if not verdict.passed:
        raise NotRealizable(verdict)
    if f.n == 3:
        return construct_triangle(f)
    if f.max_multiplicity >= 2:
        return construct_repeated_max(f)
    return construct_unique_max(f)
