from __future__ import annotations

import itertools
import json
import random

import pytest

from coxgraph.classify import ComponentClass, catalog, catalog_types, graphs_isomorphic
from coxgraph.graph import CoxeterGraph, disjoint_union
from coxgraph.profinite import Invariant, compare_profinite, fingerprint, rigidity_scope

from conftest import random_graph, triangle

C = ComponentClass.parse


def cat(name):
    return catalog(C(name))


def relabelled(g, seed=3):
    rng = random.Random(seed)
    names = [f"w{i}" for i in range(len(g))]
    rng.shuffle(names)
    h = g.renamed(dict(zip(g.vertices, names)))
    order = list(h.vertices)
    rng.shuffle(order)
    return h.reordered(order)


# -- fingerprint


def test_fingerprint_b3_tilde():
    f = fingerprint(cat("tB:3"))
    assert f.abelianization_rank == 2
    assert (f.structure.kind, f.structure.rank, f.structure.finite_part_order) == ("virtually_abelian", 3, 48)


def test_fingerprint_c3_tilde():
    f = fingerprint(cat("tC:3"))
    assert f.abelianization_rank == 3
    assert (f.structure.kind, f.structure.rank, f.structure.finite_part_order) == ("virtually_abelian", 3, 48)


def test_fingerprint_a2():
    f = fingerprint(cat("A:2"))
    assert f.abelianization_rank == 1 and f.odd_components == 1
    assert (f.structure.kind, f.structure.order) == ("finite", 6)


def test_fingerprint_five_triangle():
    assert fingerprint(triangle()).structure.kind == "not_virtually_abelian"


def test_fingerprint_json():
    data = fingerprint(cat("tF4")).to_json()
    assert data == {"abelianization_rank": 2, "odd_components": 2, "structure": "virtually_abelian",
                    "rank": 4, "finite_part_order": "1152"}
    json.dumps(data)


def test_fingerprint_multiplicative_over_components():
    f = fingerprint(disjoint_union(cat("A:1"), cat("tA:2")))
    assert f.abelianization_rank == 2
    assert (f.structure.rank, f.structure.finite_part_order) == (2, 2 * 6)


# -- compare


def test_compare_b3_c3():
    v = compare_profinite(cat("tB:3"), cat("tC:3"))
    assert (v.verdict, v.invariant) == ("distinguished", Invariant.ABELIANIZATION_RANK)


def test_compare_a2_g2_tilde():
    v = compare_profinite(cat("tA:2"), cat("tG2"))
    assert (v.verdict, v.invariant) == ("distinguished", Invariant.FINITE_PART_ORDER)


def test_compare_relabelled_f4_tilde():
    v = compare_profinite(cat("tF4"), relabelled(cat("tF4")))
    assert v.verdict == "isomorphic" and v.invariant is None


def test_compare_affine_vs_five_triangle():
    v = compare_profinite(cat("tA:2"), triangle())
    assert (v.verdict, v.invariant) == ("distinguished", Invariant.VIRTUAL_ABELIANNESS)


@pytest.mark.parametrize("n", range(3, 10))
def test_compare_b_c_tilde_all_ranks(n):
    v = compare_profinite(catalog(ComponentClass("tB", n)), catalog(ComponentClass("tC", n)))
    assert (v.verdict, v.invariant) == ("distinguished", Invariant.ABELIANIZATION_RANK)


def test_compare_finite_orders():
    v = compare_profinite(cat("A:3"), cat("B:3"))
    assert (v.verdict, v.invariant) == ("distinguished", Invariant.FINITE_ORDER)
    v = compare_profinite(cat("A:1"), cat("tA1"))
    assert (v.verdict, v.invariant) == ("distinguished", Invariant.FINITENESS)


def test_compare_b3_against_a1_a3_uses_direct_factors():
    v = compare_profinite(cat("B:3"), disjoint_union(cat("A:1"), cat("A:3")))
    assert v.verdict == "isomorphic" and v.reason == "same Coxeter direct factors"


def test_compare_g2_against_a1_a2():
    v = compare_profinite(cat("G2"), disjoint_union(cat("A:1"), cat("A:2")))
    assert v.verdict == "isomorphic"


def test_compare_rigidity_branch():
    # tA2 x A1: rank 2, point group of order 12, two odd components, like tG2
    g, h = cat("tG2"), disjoint_union(cat("tA:2"), cat("A:1"))
    assert fingerprint(g) == fingerprint(h)
    for a, b in [(g, h), (h, g)]:
        v = compare_profinite(a, b)
        assert (v.verdict, v.invariant) == ("distinguished", Invariant.RIGIDITY)


def test_compare_inconclusive_for_matching_non_affine():
    g1 = triangle(5, 5, 5)
    g2 = triangle(7, 7, 7)
    v = compare_profinite(g1, g2)
    assert v.verdict == "inconclusive" and v.invariant is None


def test_compare_json():
    data = compare_profinite(cat("tB:3"), cat("tC:3")).to_json()
    assert data["verdict"] == "distinguished" and data["invariant"] == "abelianization_rank"
    assert isinstance(data["reason"], str)
    assert json.loads(json.dumps(data)) == data


def test_compare_symmetric_and_reflexive(rng):
    sample = [random_graph(rng, max_vertices=5, density=0.5) for _ in range(40)]
    sample += [cat(n) for n in ["tA:2", "tG2", "B:3", "G2", "tC:2", "tB:3"]]
    for g in sample:
        assert compare_profinite(g, g).verdict == "isomorphic"
    for g, h in itertools.combinations(sample, 2):
        v, w = compare_profinite(g, h), compare_profinite(h, g)
        assert (v.verdict, v.invariant) == (w.verdict, w.invariant)
        if fingerprint(g) != fingerprint(h):
            assert v.verdict == "distinguished"


def test_affine_fingerprints_separate_exactly():
    graphs = [catalog(t) for t in catalog_types(max_rank=9, spherical=False)]
    for g, h in itertools.combinations(graphs, 2):
        assert (fingerprint(g) == fingerprint(h)) == graphs_isomorphic(g, h)
        assert compare_profinite(g, h).verdict == "distinguished"


# -- rigidity scope


@pytest.mark.parametrize("name, scope", [("tA1", "absolute"), ("tE7", "among_coxeter_groups"),
                                         ("tA:2", "among_coxeter_groups"), ("A:3", "unknown")])
def test_rigidity_scope(name, scope):
    assert rigidity_scope(cat(name)) == scope


def test_rigidity_scope_reducible_and_other():
    assert rigidity_scope(disjoint_union(cat("tA1"), cat("A:1"))) == "unknown"
    assert rigidity_scope(triangle()) == "unknown"
    assert rigidity_scope(CoxeterGraph()) == "unknown"
