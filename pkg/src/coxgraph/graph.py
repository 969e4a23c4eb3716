"""Coxeter graphs: data model, text format and derived subgraphs.

A Coxeter graph is a finite set of vertices together with labels on
unordered vertex pairs. Labels are integers >= 3 or ``INF``; a pair without
an edge carries the implicit label 2.

Text format::

    # comment
    vertex a
    vertex b
    edge a b inf
"""

from __future__ import annotations

import math
import re
from collections import Counter
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    BadLabel,
    DuplicateEdge,
    DuplicateVertex,
    GraphSyntaxError,
    NotOddPrime,
    SelfLoop,
    UnknownVertex,
)

INF = math.inf

Label = Union[int, float]

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")
_DECIMAL = re.compile(r"[0-9]+\Z")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def format_label(m: Label) -> str:
    return "inf" if m == INF else str(m)


def _check_label(m, line=None) -> Label:
    if m == INF:
        return INF
    if isinstance(m, bool) or not isinstance(m, int):
        raise BadLabel(f"label {m!r} is not an integer or inf", line)
    if m <= 2:
        raise BadLabel(f"label {m} must be >= 3 (label 2 is implicit)", line)
    return m


def _pair(u: str, v: str) -> frozenset:
    return frozenset((u, v))


class CoxeterGraph:
    """Immutable edge-labelled graph.

    ``edges`` may be a mapping from vertex pairs to labels or an iterable of
    ``(u, v, label)`` triples. Vertex order is kept and used as the
    tiebreak by every deterministic algorithm in the package.
    """

    __slots__ = ("_vertices", "_index", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str] = (), edges=()):
        vertices = tuple(vertices)
        index = {}
        for v in vertices:
            if not isinstance(v, str) or not _TOKEN.match(v):
                raise GraphSyntaxError(f"invalid vertex token {v!r}")
            if v in index:
                raise DuplicateVertex(f"vertex {v} declared twice")
            index[v] = len(index)
        if isinstance(edges, Mapping):
            triples = [(*tuple(k), m) for k, m in edges.items()]
        else:
            triples = list(edges)
        table: dict[frozenset, Label] = {}
        adj: dict[str, dict[str, Label]] = {v: {} for v in vertices}
        for u, v, m in triples:
            for x in (u, v):
                if x not in index:
                    raise UnknownVertex(f"unknown vertex {x!r}")
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            m = _check_label(m)
            key = _pair(u, v)
            if key in table:
                raise DuplicateEdge(f"duplicate edge {u}-{v}")
            table[key] = m
            adj[u][v] = m
            adj[v][u] = m
        self._vertices = vertices
        self._index = index
        self._edges = table
        self._adj = adj

    # -- basic access

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def position(self, v: str) -> int:
        return self._index[v]

    def label(self, u: str, v: str) -> Label:
        """Label of the pair ``{u, v}``; 2 when there is no edge."""
        if u not in self._index:
            raise UnknownVertex(f"unknown vertex {u!r}")
        if v not in self._index:
            raise UnknownVertex(f"unknown vertex {v!r}")
        if u == v:
            raise SelfLoop(f"no label on the diagonal ({u})")
        return self._adj[u].get(v, 2)

    def neighbors(self, v: str) -> dict[str, Label]:
        """Explicit neighbours of ``v`` with their labels."""
        return dict(self._adj[v])

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[str, str, Label]]:
        """Explicit edges as ``(u, v, label)`` with ``u < v``, sorted."""
        out = []
        for key, m in self._edges.items():
            u, v = sorted(key)
            out.append((u, v, m))
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def edge_pairs_in_order(self) -> list[tuple[str, str, Label]]:
        """Explicit edges ordered by vertex position of their endpoints."""
        out = []
        for key, m in self._edges.items():
            u, v = sorted(key, key=self._index.__getitem__)
            out.append((u, v, m))
        out.sort(key=lambda t: (self._index[t[0]], self._index[t[1]]))
        return out

    def pairs(self) -> Iterator[tuple[str, str, Label]]:
        """All unordered vertex pairs in position order, implicit 2s included."""
        vs = self._vertices
        for i, u in enumerate(vs):
            row = self._adj[u]
            for v in vs[i + 1:]:
                yield u, v, row.get(v, 2)

    def labels(self) -> list[Label]:
        return [m for _, _, m in self.edges()]

    # -- derived graphs

    def with_label(self, u: str, v: str, m: Label) -> "CoxeterGraph":
        """Copy with the pair ``{u, v}`` relabelled; ``m == 2`` removes the edge."""
        self.label(u, v)
        key = _pair(u, v)
        table = dict(self._edges)
        if m == 2:
            table.pop(key, None)
        else:
            table[key] = m
        return CoxeterGraph(self._vertices, table)

    def renamed(self, mapping: Mapping[str, str]) -> "CoxeterGraph":
        verts = [mapping[v] for v in self._vertices]
        return CoxeterGraph(verts, [(mapping[u], mapping[v], m) for u, v, m in self.edges()])

    def reordered(self, order: Iterable[str]) -> "CoxeterGraph":
        order = list(order)
        if sorted(order) != sorted(self._vertices):
            raise UnknownVertex("reorder must be a permutation of the vertices")
        return CoxeterGraph(order, self._edges)

    # -- dunder

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        es = ", ".join(f"{u}-{v}:{format_label(m)}" for u, v, m in self.edges())
        return f"CoxeterGraph([{', '.join(self._vertices)}]; {es})"


def disjoint_union(*graphs: CoxeterGraph, prefixes: Iterable[str] | None = None) -> CoxeterGraph:
    """Disjoint union. Vertices are prefixed (``g0_``, ``g1_``...) unless
    ``prefixes`` is given explicitly."""
    prefixes = list(prefixes) if prefixes is not None else [f"g{i}_" for i in range(len(graphs))]
    verts, edges = [], []
    for pre, g in zip(prefixes, graphs):
        verts.extend(pre + v for v in g.vertices)
        edges.extend((pre + u, pre + v, m) for u, v, m in g.edges())
    return CoxeterGraph(verts, edges)


# ---------------------------------------------------------------------------
# text format


def parse(text: str) -> CoxeterGraph:
    vertices: list[str] = []
    seen: set[str] = set()
    edges: dict[frozenset, Label] = {}
    triples = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        kind = parts[0]
        if kind == "vertex":
            if len(parts) != 2:
                raise GraphSyntaxError("expected 'vertex <token>'", lineno)
            tok = parts[1]
            if not _TOKEN.match(tok):
                raise GraphSyntaxError(f"invalid vertex token {tok!r}", lineno)
            if tok in seen:
                raise DuplicateVertex(f"vertex {tok} declared twice", lineno)
            seen.add(tok)
            vertices.append(tok)
        elif kind == "edge":
            if len(parts) != 4:
                raise GraphSyntaxError("expected 'edge <token> <token> <label>'", lineno)
            u, v, lab = parts[1:]
            for x in (u, v):
                if x not in seen:
                    raise UnknownVertex(f"unknown vertex {x!r}", lineno)
            if u == v:
                raise SelfLoop(f"self-loop at {u}", lineno)
            if lab == "inf":
                m: Label = INF
            elif _DECIMAL.match(lab):
                m = int(lab)
                if m <= 2:
                    raise BadLabel(f"label {m} must be >= 3 (label 2 is implicit)", lineno)
            else:
                raise BadLabel(f"label {lab!r} is not a decimal integer or 'inf'", lineno)
            key = _pair(u, v)
            if key in edges:
                raise DuplicateEdge(f"duplicate edge {u}-{v}", lineno)
            edges[key] = m
            triples.append((u, v, m))
        else:
            raise GraphSyntaxError(f"unknown directive {kind!r}", lineno)
    return CoxeterGraph(vertices, triples)


def serialize(g: CoxeterGraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {u} {v} {format_label(m)}" for u, v, m in g.edges()]
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# subgraphs


def induced(g: CoxeterGraph, xs: Iterable[str]) -> CoxeterGraph:
    """Full subgraph on ``xs``; vertices keep their order in ``g``."""
    xs = set(xs)
    for x in xs:
        if x not in g:
            raise UnknownVertex(f"unknown vertex {x!r}")
    verts = [v for v in g.vertices if v in xs]
    return CoxeterGraph(verts, [(u, v, m) for u, v, m in g.edges() if u in xs and v in xs])


def _blocks(g: CoxeterGraph, adjacent) -> list[list[str]]:
    """Connected blocks under ``adjacent(u, v)``, ordered by first vertex."""
    seen: set[str] = set()
    blocks = []
    for start in g.vertices:
        if start in seen:
            continue
        seen.add(start)
        block, stack = [], [start]
        while stack:
            u = stack.pop()
            block.append(u)
            for v in adjacent(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        block.sort(key=g.position)
        blocks.append(block)
    return blocks


def component_vertex_sets(g: CoxeterGraph) -> list[list[str]]:
    return _blocks(g, lambda u: g._adj[u])


def components(g: CoxeterGraph) -> list[CoxeterGraph]:
    """Connected components (explicit edges only), ordered by smallest vertex."""
    return [induced(g, part) for part in component_vertex_sets(g)]


def is_connected(g: CoxeterGraph) -> bool:
    return len(component_vertex_sets(g)) == 1


def odd_subgraph(g: CoxeterGraph) -> CoxeterGraph:
    """Same vertices, keeping only edges with a finite odd label."""
    return CoxeterGraph(
        g.vertices, [(u, v, m) for u, v, m in g.edges() if m != INF and m % 2 == 1]
    )


def odd_component_vertex_sets(g: CoxeterGraph) -> list[list[str]]:
    return component_vertex_sets(odd_subgraph(g))


def p_complement_vertex_sets(g: CoxeterGraph, p: int) -> list[list[str]]:
    """Components of the graph where ``u ~ v`` unless their label is ``p`` or inf."""
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p!r} is not an odd prime")
    adj = g._adj
    verts = g.vertices

    def adjacent(u):
        row = adj[u]
        return [v for v in verts if v != u and row.get(v, 2) not in (p, INF)]

    return _blocks(g, adjacent)


def p_complement_components(g: CoxeterGraph, p: int) -> int:
    return len(p_complement_vertex_sets(g, p))


def boundary_pairs(g: CoxeterGraph, xs: Iterable[str]) -> list[tuple[str, str, Label]]:
    """Pairs ``(x, y, label)`` with ``x`` in ``xs`` and ``y`` outside, implicit 2s included."""
    xs = set(xs)
    for x in xs:
        if x not in g:
            raise UnknownVertex(f"unknown vertex {x!r}")
    inside = [v for v in g.vertices if v in xs]
    outside = [v for v in g.vertices if v not in xs]
    return [(x, y, g._adj[x].get(y, 2)) for x in inside for y in outside]


def boundary_labels(g: CoxeterGraph, xs: Iterable[str]) -> Counter:
    return Counter(m for _, _, m in boundary_pairs(g, xs))
