"""Group-theoretic predicates of W_Gamma read off the diagram classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod

from .classify import ComponentClass, classify_component, classify_graph, normalized_class
from .errors import NotSpherical, NotVirtuallyAbelian
from .graph import INF, CoxeterGraph, component_vertex_sets, odd_component_vertex_sets

_EXCEPTIONAL_ORDERS = {
    "E6": 2**7 * 3**4 * 5,
    "E7": 2**10 * 3**4 * 5 * 7,
    "E8": 2**14 * 3**5 * 5**2 * 7,
    "F4": 2**7 * 3**2,
    "G2": 12,
    "H3": 120,
    "H4": 14400,
}

# affine family -> spherical family of the finite part of Z^n x| W
_FINITE_PART = {"tA": "A", "tB": "B", "tC": "B", "tD": "D",
                "tE6": "E6", "tE7": "E7", "tE8": "E8", "tF4": "F4", "tG2": "G2"}


def finite_order(t: ComponentClass) -> int:
    """Order of the finite Coxeter group of spherical type ``t``."""
    if not t.is_spherical:
        raise NotSpherical(f"{t} is not spherical")
    n = t.param
    if t.family == "A":
        return factorial(n + 1)
    if t.family == "B":
        return 2**n * factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * factorial(n)
    if t.family == "I2":
        return 2 * n
    return _EXCEPTIONAL_ORDERS[t.family]


def finite_part(t: ComponentClass) -> ComponentClass:
    """Spherical type of the point group of an affine type."""
    if t.family == "tA1":
        return ComponentClass("A", 1)
    fam = _FINITE_PART[t.family]
    return ComponentClass(fam, t.param if fam in ("A", "B", "D") else None)


def group_order(g: CoxeterGraph) -> int | float:
    """Exact order of W_Gamma, or ``INF``. The empty graph has order 1."""
    classes = classify_graph(g)
    if all(t.is_spherical for t in classes):
        return prod(finite_order(t) for t in classes)
    return INF


def is_finite(g: CoxeterGraph) -> bool:
    return group_order(g) != INF


def is_virtually_abelian(g: CoxeterGraph) -> tuple[bool, int]:
    """``(True, rank)`` if every component is spherical or affine, else ``(False, 0)``.

    The rank is the rank of the free abelian finite-index subgroup:
    the sum of ``|V| - 1`` over affine components.
    """
    rank = 0
    for t in classify_graph(g):
        if t.kind == "other":
            return False, 0
        if t.is_affine:
            rank += t.vertex_count - 1
    return True, rank


def abelianization_rank(g: CoxeterGraph) -> int:
    """k such that the abelianization is (Z/2)^k: components of the odd subgraph."""
    return len(odd_component_vertex_sets(g))


def is_just_infinite(g: CoxeterGraph) -> bool:
    parts = component_vertex_sets(g)
    if len(parts) != 1:
        return False
    return classify_component(g).is_affine


def is_virtually_indicable(g: CoxeterGraph) -> bool:
    return not is_finite(g)


def is_virtually_z(g: CoxeterGraph) -> bool:
    ok, rank = is_virtually_abelian(g)
    return ok and rank == 1


@dataclass(frozen=True)
class SemidirectData:
    """W_Gamma = Z^rank x| F with |F| = finite_part_order."""

    rank: int
    finite_part_order: int
    finite_part_types: tuple[ComponentClass, ...] = field(default=())


def semidirect_data(g: CoxeterGraph) -> SemidirectData:
    classes = classify_graph(g)
    if any(t.kind == "other" for t in classes):
        raise NotVirtuallyAbelian("some component is neither spherical nor affine")
    rank = 0
    parts = []
    for t in classes:
        if t.is_affine:
            rank += t.vertex_count - 1
            parts.append(finite_part(t))
        else:
            parts.append(t)
    return SemidirectData(rank, prod(finite_order(t) for t in parts), tuple(parts))


# ---------------------------------------------------------------------------
# direct decomposition of irreducible groups

Z2 = "Z2"


@dataclass(frozen=True)
class DirectDecomposition:
    """``kind`` is ``indecomposable``, ``coxeter_factors`` or
    ``decomposable_non_coxeter``. ``factors`` holds ``Z2`` and/or classes."""

    kind: str
    factors: tuple = ()

    def to_json(self):
        return {"kind": self.kind, "factors": [str(f) for f in self.factors]}


def decompose_class(t: ComponentClass) -> DirectDecomposition:
    if t.family == "B" and t.param % 2 == 1:
        return DirectDecomposition("coxeter_factors", (Z2, normalized_class("D", t.param)))
    m = 6 if t.family == "G2" else t.param if t.family == "I2" else None
    if m is not None and m % 4 == 2:
        return DirectDecomposition("coxeter_factors", (Z2, normalized_class("I2", m // 2)))
    if t.family in ("E7", "H3"):
        return DirectDecomposition("decomposable_non_coxeter")
    return DirectDecomposition("indecomposable")


def direct_decomposition(g: CoxeterGraph) -> DirectDecomposition:
    """Direct decomposition of an irreducible W_Gamma (``g`` connected)."""
    return decompose_class(classify_component(g))


def coxeter_factor_multiset(classes) -> tuple[str, ...] | None:
    """Sorted names of the finest Coxeter direct factors, splitting
    B_{2k+1} and I2(4k+2) off their central Z/2 = A_1.

    Returns None if any class is Other, since then no safe normal form exists.
    """
    out = []
    for t in classes:
        if t.kind == "other":
            return None
        d = decompose_class(t)
        if d.kind == "coxeter_factors":
            out += [str(ComponentClass("A", 1)) if f == Z2 else str(f) for f in d.factors]
        else:
            out.append(str(t))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class GroupReport:
    classification: tuple[ComponentClass, ...]
    order: int | float
    virtually_abelian: bool
    rank: int
    abelianization_rank: int
    just_infinite: bool
    virtually_indicable: bool
    virtually_Z: bool
    direct_decomposition: tuple[DirectDecomposition, ...]

    def to_json(self) -> dict:
        return {
            "classification": [str(t) for t in self.classification],
            "order": "inf" if self.order == INF else str(self.order),
            "virtually_abelian": self.virtually_abelian,
            "rank": self.rank,
            "abelianization_rank": self.abelianization_rank,
            "just_infinite": self.just_infinite,
            "virtually_indicable": self.virtually_indicable,
            "virtually_Z": self.virtually_Z,
            "direct_decomposition": [d.to_json() for d in self.direct_decomposition],
        }


def analyze(g: CoxeterGraph) -> GroupReport:
    classes = tuple(classify_graph(g))
    order = group_order(g)
    va, rank = is_virtually_abelian(g)
    return GroupReport(
        classification=classes,
        order=order,
        virtually_abelian=va,
        rank=rank,
        abelianization_rank=abelianization_rank(g),
        just_infinite=len(classes) == 1 and classes[0].is_affine,
        virtually_indicable=order == INF,
        virtually_Z=va and rank == 1,
        direct_decomposition=tuple(decompose_class(t) for t in classes),
    )
