"""Hat-families, their slacks, verdicts and realizations.

A hat-family holds the ``n`` values ``D_i = D([n] minus {i})``: the weight of
the cheapest connected subgraph joining every external label except ``i``.
Labels are 1-based everywhere in the public API.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .graph import WeightedGraph, encode, format_rational, to_rational


class DissimilarityFamily:
    """``n >= 3`` positive rationals indexed by the omitted label."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence):
        vals = tuple(to_rational(v) for v in values)
        if len(vals) < 3:
            raise ValueError(f"a hat-family needs n >= 3 values, got {len(vals)}")
        for i, v in enumerate(vals, start=1):
            if v <= 0:
                raise ValueError(f"value for label {i} is not positive: {format_rational(v)}")
        self.values: tuple[Fraction, ...] = vals

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, label: int) -> Fraction:
        if not 1 <= label <= self.n:
            raise IndexError(label)
        return self.values[label - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if isinstance(other, DissimilarityFamily):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "DissimilarityFamily(" + ", ".join(format_rational(v) for v in self.values) + ")"

    # -- derived quantities ------------------------------------------

    def slack(self, label: int) -> Fraction:
        """``sum_{j != i} D_j - (n - 2) D_i``."""
        total = sum(self.values, Fraction(0))
        d = self[label]
        return total - d - (self.n - 2) * d

    def slacks(self) -> list[Fraction]:
        total = sum(self.values, Fraction(0))
        return [total - (self.n - 1) * d for d in self.values]

    @property
    def max_value(self) -> Fraction:
        return max(self.values)

    @property
    def max_multiplicity(self) -> int:
        m = self.max_value
        return sum(1 for v in self.values if v == m)

    # -- transformations ---------------------------------------------

    def permuted(self, sigma: Sequence[int]) -> "DissimilarityFamily":
        """Relabel: label ``i`` becomes ``sigma[i - 1]``."""
        out = [None] * self.n
        for i, target in enumerate(sigma, start=1):
            out[target - 1] = self[i]
        return DissimilarityFamily(out)

    def scaled(self, factor) -> "DissimilarityFamily":
        factor = to_rational(factor)
        return DissimilarityFamily([v * factor for v in self.values])

    # -- documents ---------------------------------------------------

    def to_document(self) -> dict:
        return {"n": self.n, "hat": {str(i): format_rational(v) for i, v in enumerate(self.values, start=1)}}

    @classmethod
    def from_document(cls, doc) -> "DissimilarityFamily":
        if isinstance(doc, (str, bytes)):
            try:
                doc = json.loads(doc)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", cause=exc) from exc
        if not isinstance(doc, dict):
            raise ParseError("family document must be an object")
        if "hat" not in doc or not isinstance(doc["hat"], dict):
            raise ParseError("missing or malformed object", "hat")
        hat = doc["hat"]
        n = doc.get("n", len(hat))
        if isinstance(n, bool) or not isinstance(n, int):
            raise ParseError(f"expected an integer, got {n!r}", "n")
        if set(hat) != {str(i) for i in range(1, n + 1)}:
            raise ParseError(f"keys must be exactly '1'..'{n}', got {sorted(hat)}", "hat")
        vals = []
        for i in range(1, n + 1):
            raw = hat[str(i)]
            if isinstance(raw, bool) or not isinstance(raw, (str, int)):
                raise ParseError(f"value must be a decimal string, got {raw!r}", f"hat.{i}")
            try:
                vals.append(to_rational(raw))
            except ValueError as exc:
                raise ParseError(str(exc), f"hat.{i}", exc) from exc
        try:
            return cls(vals)
        except ValueError as exc:
            raise ParseError(str(exc), "hat", exc) from exc


def family(*values) -> DissimilarityFamily:
    """Shorthand: ``family(5, 5, 6, "41/5")``."""
    if len(values) == 1 and not isinstance(values[0], (str, int, Fraction, float)):
        values = tuple(values[0])
    return DissimilarityFamily(values)


@dataclass
class ConditionReport:
    """Exact slacks and the maximum statistics of a family."""

    slacks: list[Fraction]
    max_value: Fraction
    max_multiplicity: int

    @property
    def equality_indices(self) -> list[int]:
        return [i for i, s in enumerate(self.slacks, start=1) if s == 0]

    @property
    def negative_indices(self) -> list[int]:
        return [i for i, s in enumerate(self.slacks, start=1) if s < 0]

    @classmethod
    def of(cls, f: DissimilarityFamily) -> "ConditionReport":
        return cls(f.slacks(), f.max_value, f.max_multiplicity)


@dataclass
class Verdict:
    """Outcome of one realizability check.

    ``violations`` holds one human-readable line per failed condition; it is
    empty exactly when ``passed`` is true.
    """

    setting: str
    passed: bool
    violations: list[str]
    report: object

    def __bool__(self):
        return self.passed


@dataclass
class Realization:
    """A witness graph whose hat-family equals ``family`` exactly.

    ``permutation[p - 1]`` is the original label that played the role of
    label ``p`` during construction; ``graph`` already uses original labels.
    """

    graph: WeightedGraph
    family: DissimilarityFamily
    construction: str
    permutation: list[int]
    trace: list[str] = field(default_factory=list)
    # per-level records of recursive constructions
    induction: list = field(default_factory=list)

    @property
    def internal_vertices(self) -> list[int]:
        return list(self.graph.internal)

    def to_document(self) -> dict:
        doc = encode(self.graph)
        doc.update(
            construction=self.construction,
            permutation=list(self.permutation),
            trace=list(self.trace),
            internal_vertices=self.internal_vertices,
        )
        return doc


def descending_order(f: DissimilarityFamily) -> list[int]:
    """Labels sorted by decreasing value, ties by increasing label."""
    return sorted(range(1, f.n + 1), key=lambda i: (-f[i], i))


def finish(normalized: WeightedGraph, f: DissimilarityFamily, order: Sequence[int], construction: str, trace: list[str]) -> Realization:
    """Map normalized labels back to the caller's and check the hat-family.

    ``normalized`` uses label ``p`` for the vertex playing role ``p``;
    vertex ids above ``n`` are internal and keep their ids.
    """
    from .errors import VerificationFailed
    from .steiner import hat_vector

    mapping = {p: orig for p, orig in enumerate(order, start=1)}
    g = normalized.relabel(mapping)
    g = WeightedGraph(g.vertices, ((u, v, w) for (u, v), w in g.edges.items()), range(1, f.n + 1))
    got = hat_vector(g)
    if got != f:
        raise VerificationFailed(f"{construction} produced {got!r}, expected {f!r}")
    trace = list(trace) + [f"verified: hat-family of the witness equals {f!r}"]
    return Realization(g, f, construction, list(order), trace)
