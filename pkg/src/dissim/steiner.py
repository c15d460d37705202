"""Minimum-weight connected subgraphs (Steiner trees) with exact weights.

``steiner_weight`` runs the Dreyfus-Wagner dynamic program; ``steiner_brute``
is an independent oracle that minimizes spanning-tree weight over every
vertex superset of the terminals.  Both return the same optimal weight.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import Disconnected, TooLarge
from .family import DissimilarityFamily
from .graph import Edge, WeightedGraph, edge_key, format_rational, subgraph_weight, validate

DEFAULT_TERMINAL_CAP = 20
DEFAULT_BRUTE_CAP = 16
# above this many externals, dissimilarity vectors are computed subset by subset
_SHARED_DP_MAX_N = 10


def terminal_cap() -> int:
    return int(os.environ.get("DISSIM_TERMINAL_CAP", DEFAULT_TERMINAL_CAP))


@dataclass(frozen=True)
class SteinerResult:
    weight: Fraction
    witness: frozenset  # of (u, v) edge keys

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.witness)


@dataclass(frozen=True)
class DissimilarityVector:
    n: int
    k: int
    entries: dict  # frozenset of labels -> Fraction

    def __getitem__(self, labels) -> Fraction:
        return self.entries[frozenset(labels)]

    def to_document(self) -> dict:
        rows = sorted(self.entries.items(), key=lambda kv: sorted(kv[0]))
        return {
            "n": self.n,
            "k": self.k,
            "entries": [{"subset": sorted(s), "value": format_rational(v)} for s, v in rows],
        }


# -- Dreyfus-Wagner ------------------------------------------------------


class _Metric:
    """All-pairs shortest paths on integer-scaled weights."""

    def __init__(self, g: WeightedGraph):
        self.graph = g
        self.order = list(g.vertices)
        self.index = {v: i for i, v in enumerate(self.order)}
        # common denominator makes every weight an int; results are divided back
        self.scale = math.lcm(*(w.denominator for w in g.edges.values())) if g.edges else 1
        N = len(self.order)
        inf = math.inf
        dist = [[inf] * N for _ in range(N)]
        nxt = [[-1] * N for _ in range(N)]
        for i in range(N):
            dist[i][i] = 0
            nxt[i][i] = i
        for (u, v), w in g.edges.items():
            a, b = self.index[u], self.index[v]
            iw = w.numerator * (self.scale // w.denominator)
            dist[a][b] = dist[b][a] = iw
            nxt[a][b], nxt[b][a] = b, a
        for m in range(N):
            dm = dist[m]
            for i in range(N):
                dim = dist[i][m]
                if dim == inf:
                    continue
                di = dist[i]
                ni = nxt[i]
                for j in range(N):
                    alt = dim + dm[j]
                    if alt < di[j]:
                        di[j] = alt
                        ni[j] = ni[m]
        self.dist = dist
        self.nxt = nxt

    def path_edges(self, a: int, b: int) -> list[Edge]:
        out = []
        while a != b:
            c = self.nxt[a][b]
            out.append(edge_key(self.order[a], self.order[c]))
            a = c
        return out


class _DreyfusWagner:
    """DP table over (terminal subset, vertex) for a fixed terminal list."""

    def __init__(self, metric: _Metric, terminals: list[int]):
        self.metric = metric
        self.terms = [metric.index[t] for t in terminals]
        k = len(self.terms)
        N = len(metric.order)
        dist = metric.dist
        inf = math.inf
        full = (1 << k) - 1
        dp: list = [None] * (full + 1)
        split: list = [None] * (full + 1)
        via: list = [None] * (full + 1)
        for i, t in enumerate(self.terms):
            dp[1 << i] = list(dist[t])
        for mask in range(1, full + 1):
            if mask & (mask - 1) == 0:
                continue
            low = mask & -mask
            rest = mask ^ low
            best = [inf] * N
            arg = [0] * N
            # submasks containing the lowest bit enumerate each split once
            sub = rest
            while True:
                s1 = sub | low
                if s1 != mask:
                    a, b = dp[s1], dp[mask ^ s1]
                    for v in range(N):
                        c = a[v] + b[v]
                        if c < best[v]:
                            best[v] = c
                            arg[v] = s1
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            row = [inf] * N
            src = list(range(N))
            for u in range(N):
                bu = best[u]
                if bu == inf:
                    continue
                du = dist[u]
                for v in range(N):
                    c = bu + du[v]
                    if c < row[v]:
                        row[v] = c
                        src[v] = u
            dp[mask] = row
            split[mask] = arg
            via[mask] = src
        self.dp, self.split, self.via = dp, split, via

    def value(self, mask: int) -> int | float:
        root = self.terms[(mask & -mask).bit_length() - 1]
        return self.dp[mask][root]

    def witness(self, mask: int) -> set[Edge]:
        root = self.terms[(mask & -mask).bit_length() - 1]
        out: set[Edge] = set()
        stack = [(mask, root)]
        while stack:
            m, v = stack.pop()
            if m & (m - 1) == 0:
                t = self.terms[m.bit_length() - 1]
                out.update(self.metric.path_edges(t, v))
                continue
            u = self.via[m][v]
            out.update(self.metric.path_edges(u, v))
            s1 = self.split[m][u]
            stack.append((s1, u))
            stack.append((m ^ s1, u))
        return out


def _check_terminals(g: WeightedGraph, terminals: Iterable[int]) -> list[int]:
    ts = sorted(set(terminals))
    if not ts:
        raise ValueError("terminal set must be nonempty")
    verts = set(g.vertices)
    for t in ts:
        if t not in verts:
            raise ValueError(f"terminal {t} is not a vertex of the graph")
    return ts


def steiner_weight(g: WeightedGraph, terminals: Iterable[int]) -> SteinerResult:
    """Minimum weight of a connected subgraph of ``g`` containing ``terminals``.

    Exact: weights are scaled to integers by their common denominator before
    the dynamic program runs.  Raises :class:`Disconnected` when the
    terminals span more than one component.
    """
    validate(g)
    ts = _check_terminals(g, terminals)
    if len(ts) > terminal_cap():
        raise TooLarge(f"{len(ts)} terminals exceed the cap of {terminal_cap()} (set DISSIM_TERMINAL_CAP)")
    if len(ts) == 1:
        return SteinerResult(Fraction(0), frozenset())
    metric = _Metric(g)
    dw = _DreyfusWagner(metric, ts)
    return _result(g, metric, dw, (1 << len(ts)) - 1, ts)


def _result(g, metric, dw, mask, labels_for_error) -> SteinerResult:
    val = dw.value(mask)
    if val == math.inf:
        raise Disconnected(labels_for_error)
    witness = frozenset(dw.witness(mask))
    weight = Fraction(val, metric.scale)
    assert subgraph_weight(g, witness) == weight
    return SteinerResult(weight, witness)


# -- brute-force oracle --------------------------------------------------


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def steiner_brute(g: WeightedGraph, terminals: Iterable[int], cap: int = DEFAULT_BRUTE_CAP) -> SteinerResult:
    """Reference minimizer: spanning-tree weight over every vertex superset.

    Exponential in the number of non-terminal vertices; refuses graphs with
    more than ``cap`` vertices.
    """
    validate(g)
    ts = _check_terminals(g, terminals)
    if len(g.vertices) > cap:
        raise TooLarge(f"{len(g.vertices)} vertices exceed the brute-force cap of {cap}")
    if len(ts) == 1:
        return SteinerResult(Fraction(0), frozenset())
    others = [v for v in g.vertices if v not in set(ts)]
    by_weight = sorted(g.edges.items(), key=lambda kv: (kv[1], kv[0]))
    best = None
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            chosen = set(ts).union(extra)
            parent = {v: v for v in chosen}
            tree = []
            total = Fraction(0)
            for (u, v), w in by_weight:
                if u in chosen and v in chosen:
                    ru, rv = _find(parent, u), _find(parent, v)
                    if ru != rv:
                        parent[ru] = rv
                        tree.append((u, v))
                        total += w
            if len(tree) != len(chosen) - 1:
                continue
            if best is None or total < best[0]:
                best = (total, frozenset(tree))
    if best is None:
        raise Disconnected(ts)
    return SteinerResult(*best)


# -- dissimilarity vectors -----------------------------------------------


def dissimilarity_vector(g: WeightedGraph, k: int) -> DissimilarityVector:
    """``D_I`` for every ``k``-subset ``I`` of the external labels ``1..n``."""
    validate(g)
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n = {n}, got k = {k}")
    entries = {}
    subsets = list(itertools.combinations(range(1, n + 1), k))
    if k == 1:
        return DissimilarityVector(n, k, {frozenset(s): Fraction(0) for s in subsets})
    if n <= _SHARED_DP_MAX_N:
        # one table over all externals answers every subset
        if n > terminal_cap():
            raise TooLarge(f"{n} terminals exceed the cap of {terminal_cap()}")
        metric = _Metric(g)
        dw = _DreyfusWagner(metric, list(g.external))
        for s in subsets:
            mask = 0
            for label in s:
                mask |= 1 << (label - 1)
            verts = [g.external[label - 1] for label in s]
            entries[frozenset(s)] = _result(g, metric, dw, mask, verts).weight
    else:
        for s in subsets:
            entries[frozenset(s)] = steiner_weight(g, [g.external[label - 1] for label in s]).weight
    return DissimilarityVector(n, k, entries)


def hat_vector(g: WeightedGraph) -> DissimilarityFamily:
    """The ``(n-1)``-weights of ``g`` indexed by the omitted label."""
    n = g.n
    if n < 3:
        raise ValueError(f"hat vectors need n >= 3, got {n}")
    vec = dissimilarity_vector(g, n - 1)
    full = set(range(1, n + 1))
    return DissimilarityFamily([vec[full - {i}] for i in range(1, n + 1)])


def hat_vector_brute(g: WeightedGraph) -> DissimilarityFamily:
    """Same as :func:`hat_vector` but through :func:`steiner_brute`."""
    n = g.n
    if n < 3:
        raise ValueError(f"hat vectors need n >= 3, got {n}")
    out = []
    for i in range(1, n + 1):
        ts = [g.external[j - 1] for j in range(1, n + 1) if j != i]
        out.append(steiner_brute(g, ts).weight)
    return DissimilarityFamily(out)
