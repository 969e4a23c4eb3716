"""Recognition of spherical and affine Coxeter diagrams.

Every connected Coxeter graph is either one of the finite-type (spherical)
diagrams A_n, B_n, D_n, E_6-8, F_4, G_2, H_3, H_4, I_2(m), one of the affine
diagrams ~A_1, ~A_n, ..., ~G_2, or neither. Recognition is done by
brute force: build every catalog diagram with the right vertex count and
test labelled isomorphism against it.

The Gram matrix signature is provided as an independent numerical check of
the same trichotomy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadParameter, EmptyGraph, NotConnected
from .graph import INF, CoxeterGraph, component_vertex_sets, components

SPHERICAL_FAMILIES = ("A", "B", "D", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2")
AFFINE_FAMILIES = ("tA1", "tA", "tB", "tC", "tD", "tE6", "tE7", "tE8", "tF4", "tG2")

# minimum parameter for each parameterised family
_PARAM_MIN = {"A": 1, "B": 2, "D": 4, "I2": 5, "tA": 2, "tB": 3, "tC": 2, "tD": 4}

_FIXED_SIZE = {
    "E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2, "H3": 3, "H4": 4,
    "tA1": 2, "tE6": 7, "tE7": 8, "tE8": 9, "tF4": 5, "tG2": 3,
}


@dataclass(frozen=True, order=True)
class ComponentClass:
    """Catalog type of a connected Coxeter graph.

    ``param`` is the rank for A, B, D, tA, tB, tC, tD and the edge label
    for I2; it is None for the exceptional types and for Other.
    """

    family: str
    param: int | None = None

    def __post_init__(self):
        fam, k = self.family, self.param
        if fam == "Other":
            if k is not None:
                raise BadParameter("Other takes no parameter")
            return
        if fam not in SPHERICAL_FAMILIES and fam not in AFFINE_FAMILIES:
            raise BadParameter(f"unknown catalog type {fam!r}")
        if fam in _PARAM_MIN:
            if not isinstance(k, int) or isinstance(k, bool):
                raise BadParameter(f"{fam} needs an integer parameter")
            if k < _PARAM_MIN[fam] or (fam == "I2" and k == 6):
                raise BadParameter(f"{fam}:{k} is outside the catalog range")
        elif k is not None:
            raise BadParameter(f"{fam} takes no parameter")

    @property
    def kind(self) -> str:
        if self.family in SPHERICAL_FAMILIES:
            return "spherical"
        if self.family in AFFINE_FAMILIES:
            return "affine"
        return "other"

    @property
    def is_spherical(self) -> bool:
        return self.kind == "spherical"

    @property
    def is_affine(self) -> bool:
        return self.kind == "affine"

    @property
    def vertex_count(self) -> int | None:
        fam = self.family
        if fam == "Other":
            return None
        if fam in _FIXED_SIZE:
            return _FIXED_SIZE[fam]
        if fam == "I2":
            return 2
        if fam in ("A", "B", "D"):
            return self.param
        return self.param + 1

    @property
    def rank(self) -> int | None:
        """Rank in the usual subscript sense (vertex count, minus one if affine)."""
        n = self.vertex_count
        if n is None:
            return None
        return n - 1 if self.is_affine else n

    def __str__(self) -> str:
        return self.family if self.param is None else f"{self.family}:{self.param}"

    @classmethod
    def parse(cls, text: str) -> "ComponentClass":
        fam, sep, arg = text.partition(":")
        if not sep:
            return cls(fam)
        try:
            k = int(arg)
        except ValueError:
            raise BadParameter(f"bad parameter in {text!r}") from None
        return cls(fam, k)


OTHER = ComponentClass("Other")


def normalized_class(family: str, param: int | None = None) -> ComponentClass:
    """Build a class, folding the small aliases D_3 = A_3, I2(3) = A_2,
    I2(4) = B_2 and I2(6) = G2 onto their catalog names."""
    if family == "D" and param == 3:
        return ComponentClass("A", 3)
    if family == "D" and param == 2:
        raise BadParameter("D_2 is reducible")
    if family == "I2":
        if param == 2:
            raise BadParameter("I2(2) is reducible")
        if param == 3:
            return ComponentClass("A", 2)
        if param == 4:
            return ComponentClass("B", 2)
        if param == 6:
            return ComponentClass("G2")
    return ComponentClass(family, param)


# ---------------------------------------------------------------------------
# catalog graphs


def _path(n: int, labels: dict[int, int] | None = None) -> list[tuple[str, str, int]]:
    labels = labels or {}
    return [(f"v{i}", f"v{i + 1}", labels.get(i, 3)) for i in range(n - 1)]


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def catalog(t: ComponentClass) -> CoxeterGraph:
    """Standard graph of a catalog type, vertices ``v0 ... v{k-1}``.

    Paths are numbered from the decorated end: the 4-label of B, ~B and ~C
    sits on ``v0-v1``. D-type forks hang off the last vertex of the path.
    """
    fam, k = t.family, t.param
    if fam == "Other":
        raise BadParameter("Other has no catalog graph")
    n = t.vertex_count
    if fam == "A":
        edges = _path(n)
    elif fam == "B":
        edges = _path(n, {0: 4})
    elif fam == "D":
        edges = _path(n - 1) + [(f"v{n - 3}", f"v{n - 1}", 3)]
    elif fam in ("E6", "E7", "E8"):
        edges = _path(n - 1) + [("v2", f"v{n - 1}", 3)]
    elif fam == "F4":
        edges = _path(4, {1: 4})
    elif fam == "G2":
        edges = [("v0", "v1", 6)]
    elif fam == "H3":
        edges = _path(3, {1: 5})
    elif fam == "H4":
        edges = _path(4, {2: 5})
    elif fam == "I2":
        edges = [("v0", "v1", k)]
    elif fam == "tA1":
        edges = [("v0", "v1", INF)]
    elif fam == "tA":
        edges = _path(n) + [(f"v{n - 1}", "v0", 3)]
    elif fam == "tB":
        edges = _path(n - 1, {0: 4}) + [(f"v{n - 3}", f"v{n - 1}", 3)]
    elif fam == "tC":
        edges = _path(n, {0: 4, n - 2: 4})
    elif fam == "tD":
        # forks at both ends: v0 and v{n-2} hang off v1, v{n-1} hangs off v{n-4}
        edges = _path(n - 2) + [("v1", f"v{n - 2}", 3), (f"v{n - 4}", f"v{n - 1}", 3)]
    elif fam == "tE6":
        edges = _path(5) + [("v2", "v5", 3), ("v5", "v6", 3)]
    elif fam == "tE7":
        edges = _path(7) + [("v3", "v7", 3)]
    elif fam == "tE8":
        edges = _path(8) + [("v2", "v8", 3)]
    elif fam == "tF4":
        edges = _path(5, {2: 4})
    elif fam == "tG2":
        edges = _path(3, {1: 6})
    else:  # pragma: no cover - guarded by ComponentClass
        raise BadParameter(fam)
    return CoxeterGraph(_names(n), edges)


def catalog_types(max_rank: int = 9, i2_labels=range(5, 51), affine=True, spherical=True):
    """Catalog types with rank <= ``max_rank`` (I2 restricted to ``i2_labels``)."""
    out = []
    if spherical:
        out += [ComponentClass("A", n) for n in range(1, max_rank + 1)]
        out += [ComponentClass("B", n) for n in range(2, max_rank + 1)]
        out += [ComponentClass("D", n) for n in range(4, max_rank + 1)]
        out += [ComponentClass(f) for f in ("E6", "E7", "E8", "F4", "G2", "H3", "H4")
                if _FIXED_SIZE[f] <= max_rank]
        out += [ComponentClass("I2", m) for m in i2_labels if m != 6] if max_rank >= 2 else []
    if affine:
        out += [ComponentClass("tA1")] if max_rank >= 1 else []
        out += [ComponentClass("tA", n) for n in range(2, max_rank + 1)]
        out += [ComponentClass("tB", n) for n in range(3, max_rank + 1)]
        out += [ComponentClass("tC", n) for n in range(2, max_rank + 1)]
        out += [ComponentClass("tD", n) for n in range(4, max_rank + 1)]
        out += [ComponentClass(f) for f in ("tE6", "tE7", "tE8", "tF4", "tG2")
                if _FIXED_SIZE[f] - 1 <= max_rank]
    return out


@lru_cache(maxsize=None)
def _catalog_by_size(n: int) -> tuple[tuple[ComponentClass, CoxeterGraph], ...]:
    """All catalog graphs on ``n >= 3`` vertices (finitely many)."""
    types = [t for t in catalog_types(max_rank=n, i2_labels=()) if t.vertex_count == n]
    return tuple((t, catalog(t)) for t in types)


# ---------------------------------------------------------------------------
# labelled isomorphism


def _signature(g: CoxeterGraph, v: str):
    labs = sorted(g.neighbors(v).values())
    return (len(labs), tuple(labs))


def find_isomorphism(g1: CoxeterGraph, g2: CoxeterGraph) -> dict[str, str] | None:
    """Label-preserving vertex bijection ``g1 -> g2``, or None.

    Vertices of ``g1`` are assigned in order and candidates in ``g2`` are
    tried in order, so the first bijection found is the lexicographically
    least one.
    """
    if len(g1) != len(g2):
        return None
    if sorted(g1.labels()) != sorted(g2.labels()):
        return None
    sig1 = {v: _signature(g1, v) for v in g1.vertices}
    sig2 = {v: _signature(g2, v) for v in g2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    order = list(g1.vertices)
    cands = {v: [w for w in g2.vertices if sig2[w] == sig1[v]] for v in order}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in cands[v]:
            if w in used:
                continue
            if all(g1.label(v, x) == g2.label(w, mapping[x]) for x in order[:i]):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def graphs_isomorphic(g1: CoxeterGraph, g2: CoxeterGraph) -> bool:
    return find_isomorphism(g1, g2) is not None


# ---------------------------------------------------------------------------
# classification


def _require_connected(g: CoxeterGraph) -> None:
    if len(g) == 0:
        raise EmptyGraph("graph has no vertices")
    if len(component_vertex_sets(g)) != 1:
        raise NotConnected("graph is not connected")


def classify_component(g: CoxeterGraph) -> ComponentClass:
    _require_connected(g)
    n = len(g)
    if n == 1:
        return ComponentClass("A", 1)
    if n == 2:
        (_, _, m), = g.edges()
        if m == INF:
            return ComponentClass("tA1")
        return normalized_class("I2", m)
    for t, h in _catalog_by_size(n):
        if graphs_isomorphic(g, h):
            return t
    return OTHER


def classify_graph(g: CoxeterGraph) -> list[ComponentClass]:
    return [classify_component(c) for c in components(g)]


# ---------------------------------------------------------------------------
# Gram matrix oracle


@dataclass(frozen=True)
class GramClass:
    """Spectral type of the Gram matrix: ``positive_definite``,
    ``degenerate`` (positive semidefinite, singular) or ``indefinite``."""

    kind: str
    corank: int = 0


def gram_matrix(g: CoxeterGraph) -> np.ndarray:
    n = len(g)
    mat = np.eye(n)
    for u, v, m in g.edges():
        i, j = g.position(u), g.position(v)
        mat[i, j] = mat[j, i] = -1.0 if m == INF else -math.cos(math.pi / m)
    return mat


def gram_class(g: CoxeterGraph) -> GramClass:
    _require_connected(g)
    n = len(g)
    eps = 1e-9 * n
    eig = np.linalg.eigvalsh(gram_matrix(g))
    if np.any(eig < -eps):
        return GramClass("indefinite")
    zero = int(np.sum(np.abs(eig) <= eps))
    if zero:
        return GramClass("degenerate", zero)
    return GramClass("positive_definite")
