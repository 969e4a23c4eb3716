"""Explicit Coxeter quotients W_Gamma ->> W_Omega.

Every map here sends each generator to a generator of the target or to the
identity. Such a map is a homomorphism iff each defining relation
``(uv)^m`` survives, which ``verify_quotient_map`` checks symbolically.
All constructors verify what they emit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .errors import (
    EdgeLabelPrimeOrInfinite,
    LabelTooSmall,
    MalformedMap,
    NotADivisor,
    NotInfiniteEdge,
    NotOddPrime,
    OddBoundaryLabel,
    SourceVirtuallyZ,
    TooFewComponents,
)
from .graph import (
    INF,
    CoxeterGraph,
    boundary_pairs,
    component_vertex_sets,
    format_label,
    induced,
    is_prime,
    odd_component_vertex_sets,
    p_complement_vertex_sets,
    prime_factors,
    serialize,
)
from .invariants import is_finite, is_virtually_z

INF_EDGE_RESOLUTION = "InfEdgeResolution"
PRIME_COLLAPSE = "PrimeCollapse"
PARABOLIC_RETRACTION = "ParabolicRetraction"
TRIANGLE_PROJECTION = "TriangleProjection"

TRIANGLE_NOTE = ("components after the second are merged onto the third target "
                 "vertex instead of being killed, so every relation survives")

# images: target vertex name, or None for the identity
GeneratorMap = Mapping[str, "str | None"]


@dataclass(frozen=True)
class QuotientWitness:
    source: CoxeterGraph
    target: CoxeterGraph
    map: dict
    target_infinite: bool
    proper: bool
    construction: str
    note: str | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "construction": self.construction,
            "target": serialize(self.target),
            "map": {v: ("1" if self.map[v] is None else self.map[v])
                    for v in self.source.vertices},
            "target_infinite": self.target_infinite,
            "proper": self.proper,
        }
        if self.note:
            out["note"] = self.note
        return out


def _image_order(dst: CoxeterGraph, a, b):
    """Order of the product of two generator images in the target."""
    if a is None and b is None:
        return 1
    if a is None or b is None:
        return 2
    if a == b:
        return 1
    return dst.label(a, b)


def verify_quotient_map(src: CoxeterGraph, dst: CoxeterGraph, f: GeneratorMap) -> bool:
    """True iff ``f`` extends to a surjective homomorphism W_src ->> W_dst."""
    if set(f) != set(src.vertices):
        raise MalformedMap("map must assign every source vertex exactly once")
    for v, w in f.items():
        if w is not None and w not in dst:
            raise MalformedMap(f"image {w!r} of {v} is not a target vertex")
    if {w for w in f.values() if w is not None} != set(dst.vertices):
        return False
    for u, v, m in src.pairs():
        if m == INF:
            continue
        k = _image_order(dst, f[u], f[v])
        if k == INF or m % k:
            return False
    return True


def _witness(src, dst, f, proper, construction, note=None) -> QuotientWitness:
    assert verify_quotient_map(src, dst, f), f"{construction} produced an invalid map"
    return QuotientWitness(src, dst, dict(f), not is_finite(dst), proper, construction, note)


def _identity(g: CoxeterGraph) -> dict:
    return {v: v for v in g.vertices}


def resolve_infinite_edge(g: CoxeterGraph, e: tuple[str, str], m: int = 7) -> QuotientWitness:
    """Relabel an inf edge by ``m >= 7``; valid unless W_Gamma is virtually Z."""
    s, t = e
    if g.label(s, t) != INF:
        raise NotInfiniteEdge(f"{s}-{t} has label {format_label(g.label(s, t))}")
    if m < 7:
        raise LabelTooSmall(f"label {m} < 7")
    if is_virtually_z(g):
        raise SourceVirtuallyZ("W is virtually Z; no infinite relabelling quotient")
    # st has infinite order in the source and order m in the target
    return _witness(g, g.with_label(s, t, m), _identity(g), True, INF_EDGE_RESOLUTION)


def prime_collapse(g: CoxeterGraph, e: tuple[str, str], p: int) -> QuotientWitness:
    """Replace a composite label by one of its prime factors (2 deletes the edge)."""
    u, v = e
    m = g.label(u, v)
    if m == INF or is_prime(m):
        raise EdgeLabelPrimeOrInfinite(f"{u}-{v} has label {format_label(m)}")
    if not is_prime(p) or m % p:
        raise NotADivisor(f"{p} is not a prime divisor of {m}")
    return _witness(g, g.with_label(u, v, p), _identity(g), True, PRIME_COLLAPSE)


def parabolic_retraction(g: CoxeterGraph, xs) -> QuotientWitness:
    """Retract onto the special parabolic subgroup on ``xs``, killing the rest.

    Needs every label between ``xs`` and its complement to be even or inf.
    """
    xs = set(xs)
    for x, y, m in boundary_pairs(g, xs):
        if m != INF and m % 2:
            raise OddBoundaryLabel((x, y), m)
    f = {v: (v if v in xs else None) for v in g.vertices}
    return _witness(g, induced(g, xs), f, len(xs) < len(g), PARABOLIC_RETRACTION)


def triangle_projection(g: CoxeterGraph, p: int) -> QuotientWitness:
    """Project onto the triangle with all labels ``p``.

    Uses the components C_1, C_2, ... of the graph where two vertices are
    joined unless their label is ``p`` or inf; needs at least three of them.
    C_1 goes to ``t1``, C_2 to ``t2`` and everything else to ``t3``.
    """
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p!r} is not an odd prime")
    blocks = p_complement_vertex_sets(g, p)
    if len(blocks) < 3:
        raise TooFewComponents(f"only {len(blocks)} component(s) after removing label {p}")
    target = CoxeterGraph(["t1", "t2", "t3"], [("t1", "t2", p), ("t1", "t3", p), ("t2", "t3", p)])
    f = {}
    for i, block in enumerate(blocks):
        for v in block:
            f[v] = f"t{min(i, 2) + 1}"
    # the map is a bijection on generators only for three singleton blocks;
    # it is then an isomorphism exactly when every source label is p
    proper = not (len(g) == 3 and all(m == p for _, _, m in g.pairs()))
    return _witness(g, target, f, proper, TRIANGLE_PROJECTION, TRIANGLE_NOTE)


# ---------------------------------------------------------------------------
# search


def _subsets_by_size_desc(blocks):
    idx = range(len(blocks))
    for r in range(len(blocks), 0, -1):
        for combo in combinations(idx, r):
            yield [v for i in combo for v in blocks[i]]


def find_infinite_proper_quotient(g: CoxeterGraph, max_odd_blocks: int = 16) -> QuotientWitness | None:
    """First verified witness that W_Gamma has an infinite proper quotient.

    Sound but not complete: None means none of the constructions applied.
    ``max_odd_blocks`` bounds the subset enumeration of the general
    retraction step (2^k subsets for k odd-subgraph components).
    """
    # (a) project onto an infinite component
    parts = component_vertex_sets(g)
    if len(parts) > 1:
        for part in parts:
            if not is_finite(induced(g, part)):
                return parabolic_retraction(g, part)

    # (b) relabel an inf edge
    if not is_virtually_z(g):
        for u, v, m in g.edge_pairs_in_order():
            if m == INF:
                w = resolve_infinite_edge(g, (u, v), 7)
                if w.target_infinite:
                    return w

    # (c) retraction onto a union of odd-subgraph components; exactly these
    # subsets have an all even-or-inf boundary
    blocks = odd_component_vertex_sets(g)
    if len(blocks) <= max_odd_blocks:
        for xs in _subsets_by_size_desc(blocks):
            if len(xs) == len(g):
                continue
            if not is_finite(induced(g, xs)):
                return parabolic_retraction(g, xs)

    # (d) prime collapse of a composite label
    for u, v, m in g.edge_pairs_in_order():
        if m == INF or is_prime(m):
            continue
        for p in prime_factors(m):
            w = prime_collapse(g, (u, v), p)
            if w.target_infinite:
                return w

    # (e) triangle projection
    primes = {3} | {m for m in g.labels() if m != INF and m != 2 and is_prime(m)}
    for p in sorted(primes):
        if len(p_complement_vertex_sets(g, p)) < 3:
            continue
        w = triangle_projection(g, p)
        if w.proper and w.target_infinite:
            return w
    return None
