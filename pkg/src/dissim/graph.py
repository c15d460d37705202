"""Positive-weighted simple graphs with exact rational weights.

A :class:`WeightedGraph` is immutable.  Edges are keyed by the normalized
``(min, max)`` vertex pair, and the first ``n`` distinguished vertices listed
in ``external`` carry the labels ``1..n``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DuplicateEdge,
    ExternalNotVertex,
    NonPositiveWeight,
    ParseError,
    SelfLoop,
    UnknownEdge,
)

Edge = tuple[int, int]


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or decimal / ``"p/q"`` string to a Fraction, exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # repr gives the shortest decimal that round-trips
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    """Exact decimal string when ``q`` has a terminating expansion, else ``"p/q"``."""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    scaled = abs(q.numerator) * 10**places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class WeightedGraph:
    """Simple undirected graph with positive rational edge weights.

    Parameters
    ----------
    vertices : iterable of int
    edges : iterable of ``(u, v, w)`` triples; ``w`` is anything
        :func:`to_rational` accepts.
    external : sequence of int
        The labelled vertices; ``external[i - 1]`` carries label ``i``.
    check : bool
        Run :func:`validate` on construction (default).  Pass ``False`` to
        build a deliberately broken graph, e.g. to test validation itself.
    """

    __slots__ = ("vertices", "raw_edges", "external", "edges", "_adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable, external: Iterable[int] = (), check: bool = True):
        self.vertices: tuple[int, ...] = tuple(sorted(set(int(v) for v in vertices)))
        self.raw_edges: tuple[tuple[int, int, Fraction], ...] = tuple(
            (int(u), int(v), to_rational(w)) for u, v, w in edges
        )
        self.external: tuple[int, ...] = tuple(int(v) for v in external)
        emap: dict[Edge, Fraction] = {}
        for u, v, w in self.raw_edges:
            emap.setdefault(edge_key(u, v), w)
        self.edges: dict[Edge, Fraction] = dict(sorted(emap.items()))
        adj: dict[int, dict[int, Fraction]] = {v: {} for v in self.vertices}
        for (u, v), w in self.edges.items():
            if u != v and u in adj and v in adj:
                adj[u][v] = w
                adj[v][u] = w
        self._adj = adj
        if check:
            validate(self)

    @property
    def n(self) -> int:
        return len(self.external)

    @property
    def internal(self) -> tuple[int, ...]:
        ext = set(self.external)
        return tuple(v for v in self.vertices if v not in ext)

    def neighbors(self, v: int) -> Mapping[int, Fraction]:
        return self._adj[v]

    def weight(self, u: int, v: int) -> Fraction:
        try:
            return self.edges[edge_key(u, v)]
        except KeyError:
            raise UnknownEdge(f"no edge ({u}, {v})") from None

    def relabel(self, mapping: Mapping[int, int]) -> "WeightedGraph":
        """Rename vertices; ids missing from ``mapping`` are kept."""
        m = lambda v: mapping.get(v, v)  # noqa: E731
        return WeightedGraph(
            (m(v) for v in self.vertices),
            ((m(u), m(v), w) for (u, v), w in self.edges.items()),
            (m(v) for v in self.external),
        )

    def scaled(self, factor) -> "WeightedGraph":
        factor = to_rational(factor)
        return WeightedGraph(self.vertices, ((u, v, w * factor) for (u, v), w in self.edges.items()), self.external)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.vertices, self.edges, self.external) == (other.vertices, other.edges, other.external)

    def __hash__(self):
        return hash((self.vertices, tuple(self.edges.items()), self.external))

    def __repr__(self):
        body = ", ".join(f"{u}-{v}:{format_rational(w)}" for (u, v), w in self.edges.items())
        return f"WeightedGraph(external={list(self.external)}, vertices={list(self.vertices)}, edges=[{body}])"


def validate(g: WeightedGraph) -> None:
    """Raise on the first broken invariant; return ``None`` when ``g`` is valid.

    Edges are inspected in input order, then the external labels.
    """
    verts = set(g.vertices)
    seen: set[Edge] = set()
    for u, v, w in g.raw_edges:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = edge_key(u, v)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        if w <= 0:
            raise NonPositiveWeight(f"edge {key} has weight {format_rational(w)}")
        for x in (u, v):
            if x not in verts:
                raise UnknownEdge(f"edge {key} uses unknown vertex {x}")
    ext_seen: set[int] = set()
    for x in g.external:
        if x not in verts:
            raise ExternalNotVertex(f"external vertex {x} is not a vertex")
        if x in ext_seen:
            raise ExternalNotVertex(f"external vertex {x} listed twice")
        ext_seen.add(x)


def subgraph_weight(g: WeightedGraph, edges: Iterable[Edge]) -> Fraction:
    """Sum of the weights of ``edges``, each given as an unordered pair."""
    keys = {edge_key(u, v) for u, v in edges}
    total = Fraction(0)
    for key in sorted(keys):
        if key not in g.edges:
            raise UnknownEdge(f"no edge {key}")
        total += g.edges[key]
    return total


# -- documents -----------------------------------------------------------


def encode(g: WeightedGraph) -> dict:
    return {
        "n": g.n,
        "external": list(g.external),
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "w": format_rational(w)} for (u, v), w in g.edges.items()],
    }


def _int_field(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", field)
    return value


def decode(doc) -> WeightedGraph:
    """Build a graph from a document (a dict or its JSON text).

    Unknown keys are ignored, so realization documents decode too.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", cause=exc) from exc
    if not isinstance(doc, dict):
        raise ParseError("graph document must be an object")
    for key in ("external", "vertices", "edges"):
        if key not in doc:
            raise ParseError("missing field", key)
        if not isinstance(doc[key], list):
            raise ParseError("expected a list", key)
    external = [_int_field(x, f"external[{i}]") for i, x in enumerate(doc["external"])]
    vertices = [_int_field(x, f"vertices[{i}]") for i, x in enumerate(doc["vertices"])]
    edges = []
    for i, e in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(e, dict):
            raise ParseError("edge must be an object", where)
        for key in ("u", "v", "w"):
            if key not in e:
                raise ParseError("missing field", f"{where}.{key}")
        u = _int_field(e["u"], f"{where}.u")
        v = _int_field(e["v"], f"{where}.v")
        w = e["w"]
        if isinstance(w, bool) or not isinstance(w, (str, int)):
            raise ParseError(f"weight must be a decimal string, got {w!r}", f"{where}.w")
        try:
            w = to_rational(w)
        except ValueError as exc:
            raise ParseError(str(exc), f"{where}.w", exc) from exc
        edges.append((u, v, w))
    if "n" in doc and _int_field(doc["n"], "n") != len(external):
        raise ParseError(f"n = {doc['n']} but {len(external)} external vertices listed", "n")
    try:
        return WeightedGraph(vertices, edges, external)
    except (SelfLoop, DuplicateEdge, NonPositiveWeight, ExternalNotVertex, UnknownEdge) as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}", "edges" if not isinstance(exc, ExternalNotVertex) else "external", exc) from exc


def dumps(g: WeightedGraph, **kwargs) -> str:
    return json.dumps(encode(g), **kwargs)


def to_dot(g: WeightedGraph, name: str = "G") -> str:
    """Undirected DOT text; edges labelled by weight, external vertices double-circled."""
    lines = [f"graph {name} {{"]
    ext = set(g.external)
    labels = {v: i for i, v in enumerate(g.external, start=1)}
    for v in g.vertices:
        if v in ext:
            lines.append(f'  {v} [shape=doublecircle, label="{v}", xlabel="label {labels[v]}"];')
        else:
            lines.append(f'  {v} [shape=circle, label="{v}"];')
    for (u, v), w in g.edges.items():
        lines.append(f'  {u} -- {v} [label="{format_rational(w)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
