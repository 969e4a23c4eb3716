"""Profinite invariants of Coxeter groups and pairwise comparison.

Every invariant used here is determined by the profinite completion:
finiteness and the order of a finite group, virtual abelianness, the
translation rank and point-group order of Z^n x| F, and the abelianization.
Any disagreement therefore separates the completions. Agreement decides
nothing by itself except when one side is irreducible affine, where
rigidity among Coxeter groups applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .classify import classify_graph, graphs_isomorphic
from .invariants import (
    abelianization_rank,
    coxeter_factor_multiset,
    finite_order,
    semidirect_data,
)
from .graph import CoxeterGraph


@dataclass(frozen=True)
class Structure:
    """``kind`` is ``finite`` (``order`` set), ``virtually_abelian``
    (``rank`` and ``finite_part_order`` set) or ``not_virtually_abelian``."""

    kind: str
    order: int | None = None
    rank: int | None = None
    finite_part_order: int | None = None


@dataclass(frozen=True)
class ProfiniteFingerprint:
    abelianization_rank: int
    odd_components: int
    structure: Structure

    def to_json(self) -> dict:
        s = self.structure
        out = {"abelianization_rank": self.abelianization_rank,
               "odd_components": self.odd_components,
               "structure": s.kind}
        if s.kind == "finite":
            out["order"] = str(s.order)
        elif s.kind == "virtually_abelian":
            out["rank"] = s.rank
            out["finite_part_order"] = str(s.finite_part_order)
        return out


class Invariant(str, Enum):
    FINITENESS = "finiteness"
    FINITE_ORDER = "finite_order"
    VIRTUAL_ABELIANNESS = "virtual_abelianness"
    RANK = "rank"
    FINITE_PART_ORDER = "finite_part_order"
    ABELIANIZATION_RANK = "abelianization_rank"
    RIGIDITY = "rigidity"


@dataclass(frozen=True)
class CompareVerdict:
    """``verdict`` is ``isomorphic``, ``distinguished`` or ``inconclusive``."""

    verdict: str
    invariant: Invariant | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "invariant": self.invariant.value if self.invariant else None,
                "reason": self.reason}


def fingerprint(g: CoxeterGraph) -> ProfiniteFingerprint:
    classes = classify_graph(g)
    k = abelianization_rank(g)
    if all(t.is_spherical for t in classes):
        order = 1
        for t in classes:
            order *= finite_order(t)
        structure = Structure("finite", order=order)
    elif any(t.kind == "other" for t in classes):
        structure = Structure("not_virtually_abelian")
    else:
        sd = semidirect_data(g)
        structure = Structure("virtually_abelian", rank=sd.rank,
                              finite_part_order=sd.finite_part_order)
    return ProfiniteFingerprint(k, k, structure)


def _is_connected_affine(g: CoxeterGraph) -> bool:
    classes = classify_graph(g)
    return len(classes) == 1 and classes[0].is_affine


def _invariant_pairs(f1: ProfiniteFingerprint, f2: ProfiniteFingerprint):
    """Invariants in comparison order, as ``(tag, value1, value2)``."""
    s1, s2 = f1.structure, f2.structure
    fin1, fin2 = s1.kind == "finite", s2.kind == "finite"
    yield Invariant.FINITENESS, fin1, fin2
    if fin1 and fin2:
        yield Invariant.FINITE_ORDER, s1.order, s2.order
    va1, va2 = s1.kind != "not_virtually_abelian", s2.kind != "not_virtually_abelian"
    yield Invariant.VIRTUAL_ABELIANNESS, va1, va2
    if s1.kind == s2.kind == "virtually_abelian":
        yield Invariant.RANK, s1.rank, s2.rank
        yield Invariant.FINITE_PART_ORDER, s1.finite_part_order, s2.finite_part_order
    yield Invariant.ABELIANIZATION_RANK, f1.abelianization_rank, f2.abelianization_rank


def compare_profinite(g1: CoxeterGraph, g2: CoxeterGraph) -> CompareVerdict:
    f1, f2 = fingerprint(g1), fingerprint(g2)
    for tag, a, b in _invariant_pairs(f1, f2):
        if a != b:
            return CompareVerdict("distinguished", tag, f"{tag.value} differs: {a} vs {b}")

    if graphs_isomorphic(g1, g2):
        return CompareVerdict("isomorphic", reason="graph isomorphism")

    aff1, aff2 = _is_connected_affine(g1), _is_connected_affine(g2)
    # equal fingerprints between two irreducible affine graphs force isomorphic graphs
    assert not (aff1 and aff2), "equal fingerprints on non-isomorphic affine graphs"
    if aff1 or aff2:
        return CompareVerdict("distinguished", Invariant.RIGIDITY,
                              "irreducible affine side is profinitely rigid among Coxeter groups")

    m1 = coxeter_factor_multiset(classify_graph(g1))
    if m1 is not None and m1 == coxeter_factor_multiset(classify_graph(g2)):
        return CompareVerdict("isomorphic", reason="same Coxeter direct factors")
    return CompareVerdict("inconclusive", reason="invariants agree; no rigidity result applies")


def rigidity_scope(g: CoxeterGraph) -> str:
    """``absolute`` for ~A_1, ``among_coxeter_groups`` for other irreducible
    affine graphs, ``unknown`` otherwise."""
    classes = classify_graph(g)
    if len(classes) == 1 and classes[0].family == "tA1":
        return "absolute"
    if len(classes) == 1 and classes[0].is_affine:
        return "among_coxeter_groups"
    return "unknown"
