from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxgraph.classify import ComponentClass, catalog
from coxgraph.errors import (
    BadLabel,
    DuplicateEdge,
    DuplicateVertex,
    GraphSyntaxError,
    NotOddPrime,
    SelfLoop,
    UnknownVertex,
)
from coxgraph.graph import (
    INF,
    CoxeterGraph,
    boundary_labels,
    components,
    induced,
    odd_subgraph,
    p_complement_components,
    parse,
    serialize,
)

from conftest import random_graph, triangle


def cat(name):
    return catalog(ComponentClass.parse(name))


def delta_p_components_oracle(g, p):
    """Build the complete graph with implicit 2-labels, drop inf and p pairs."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    labels = {frozenset((u, v)): m for u, v, m in g.edges()}
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i + 1:]:
            m = labels.get(frozenset((u, v)), 2)
            if m != INF and m != p:
                h.add_edge(u, v)
    return nx.number_connected_components(h)


# -- parse / serialize


def test_parse_inf_edge():
    g = parse("vertex a\nvertex b\nedge a b inf")
    assert g.vertices == ("a", "b")
    assert g.label("a", "b") == INF
    assert len(g.edges()) == 1


def test_parse_label_two_is_rejected():
    with pytest.raises(BadLabel) as exc:
        parse("vertex a\nvertex b\nedge a b 2")
    assert exc.value.line == 3


def test_parse_unknown_vertex():
    with pytest.raises(UnknownVertex) as exc:
        parse("vertex a\nedge a b 3")
    assert exc.value.line == 2


@pytest.mark.parametrize("text, err, line", [
    ("vertex a\nvertex a", DuplicateVertex, 2),
    ("vertex a\nvertex b\nedge a b 3\nedge b a 4", DuplicateEdge, 4),
    ("vertex a\nedge a a 3", SelfLoop, 2),
    ("vertex a\nvertex b\nedge a b 3.5", BadLabel, 3),
    ("vertex a\nvertex b\nedge a b -3", BadLabel, 3),
    ("vertex a\nvertex b\nedge a b Inf", BadLabel, 3),
    ("vertex a b", GraphSyntaxError, 1),
    ("vertex a-b", GraphSyntaxError, 1),
    ("node a", GraphSyntaxError, 1),
    ("vertex a\n\nedge a", GraphSyntaxError, 3),
])
def test_parse_errors_carry_line(text, err, line):
    with pytest.raises(err) as exc:
        parse(text)
    assert exc.value.line == line


def test_parse_comments_blank_lines_and_crlf():
    g = parse("# header\r\nvertex a\r\n\r\n  # indented comment\nvertex b\r\nedge b a 5\r\n")
    assert g == CoxeterGraph(["a", "b"], [("a", "b", 5)])


def test_serialize_empty():
    assert serialize(CoxeterGraph()) == ""
    assert parse("") == CoxeterGraph()


def test_serialize_a1_tilde():
    assert serialize(cat("tA1")) == "vertex v0\nvertex v1\nedge v0 v1 inf\n"


def test_serialize_sorts_edges_and_keeps_vertex_order():
    g = CoxeterGraph(["z", "b", "a"], [("z", "a", 4), ("b", "a", 3)])
    assert serialize(g) == "vertex z\nvertex b\nvertex a\nedge a b 3\nedge a z 4\n"


def test_roundtrip_random_corpus():
    rng = random.Random(1)
    for _ in range(1000):
        g = random_graph(rng, max_vertices=10, labels=(3, 4, 5, 6, 7, 8, 9, INF))
        text = serialize(g)
        assert parse(text) == g
        assert serialize(parse(text)) == text


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 7))
    verts = draw(st.lists(st.from_regex(r"[A-Za-z0-9_]{1,4}", fullmatch=True),
                          min_size=n, max_size=n, unique=True))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            lab = draw(st.one_of(st.none(), st.integers(3, 12), st.just(INF)))
            if lab is not None:
                edges.append((verts[i], verts[j], lab))
    return CoxeterGraph(verts, edges)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_roundtrip_property(g):
    assert parse(serialize(g)) == g


# -- components and derived subgraphs


def test_components_ignore_implicit_twos():
    g = CoxeterGraph(["a", "b", "c"], [("a", "b", 3)])
    parts = components(g)
    assert [p.vertices for p in parts] == [("a", "b"), ("c",)]


def test_components_cycle_is_one_part():
    assert len(components(cat("tA:2"))) == 1


def test_components_empty():
    assert components(CoxeterGraph()) == []


def test_components_ordered_by_first_vertex():
    g = CoxeterGraph(["c", "a", "b", "d"], [("a", "d", 3)])
    assert [p.vertices for p in components(g)] == [("c",), ("a", "d"), ("b",)]


def test_components_partition_random(rng):
    for _ in range(200):
        g = random_graph(rng)
        parts = components(g)
        seen = [v for p in parts for v in p.vertices]
        assert sorted(seen) == sorted(g.vertices)
        owner = {v: i for i, p in enumerate(parts) for v in p.vertices}
        for u, v, _ in g.edges():
            assert owner[u] == owner[v]
        h = nx.Graph()
        h.add_nodes_from(g.vertices)
        h.add_edges_from((u, v) for u, v, _ in g.edges())
        assert len(parts) == nx.number_connected_components(h)


def test_odd_subgraph_examples():
    c2 = cat("tC:2")
    assert odd_subgraph(c2) == CoxeterGraph(c2.vertices)
    a1t = cat("tA1")
    assert odd_subgraph(a1t).edges() == []
    a3 = cat("A:3")
    assert odd_subgraph(a3) == a3


def test_odd_subgraph_idempotent(rng):
    for _ in range(200):
        g = random_graph(rng)
        once = odd_subgraph(g)
        assert odd_subgraph(once) == once
        assert all(m != INF and m % 2 for m in once.labels())


def test_p_complement_five_triangle():
    assert p_complement_components(triangle(), 5) == 3
    assert p_complement_components(triangle(), 3) == 1


def test_p_complement_inf_pair_is_not_adjacent():
    g = cat("tA1")
    assert delta_p_components_oracle(g, 3) == 2
    assert p_complement_components(g, 3) == 2


def test_p_complement_four_path_of_fives_is_connected():
    # label-2 pairs a-c, a-d, b-d keep everything in one block
    g = CoxeterGraph("abcd", [("a", "b", 5), ("b", "c", 5), ("c", "d", 5)])
    assert delta_p_components_oracle(g, 5) == 1
    assert p_complement_components(g, 5) == 1


@pytest.mark.parametrize("p", [2, 4, 9, 1, 0, -3])
def test_p_complement_rejects_non_odd_primes(p):
    with pytest.raises(NotOddPrime):
        p_complement_components(triangle(), p)


def test_p_complement_matches_oracle(rng):
    for _ in range(300):
        g = random_graph(rng, labels=(3, 5, 7, 9, 15, INF), density=0.6)
        for p in (3, 5, 7):
            assert p_complement_components(g, p) == delta_p_components_oracle(g, p)


def test_adding_non_p_edge_never_increases_p_components(rng):
    for _ in range(300):
        g = random_graph(rng, max_vertices=7, density=0.5, min_vertices=2)
        p = rng.choice([3, 5, 7])
        u, v = rng.sample(list(g.vertices), 2)
        lab = rng.choice([m for m in (3, 4, 5, 6, 7, 8, 9) if m != p])
        before = p_complement_components(g, p)
        assert p_complement_components(g.with_label(u, v, lab), p) <= before


def test_induced():
    g = cat("tA:2")
    assert induced(g, ["v0", "v1"]) == CoxeterGraph(["v0", "v1"], [("v0", "v1", 3)])
    assert induced(g, g.vertices) == g
    assert induced(g, []) == CoxeterGraph()
    with pytest.raises(UnknownVertex):
        induced(g, ["nope"])


def test_boundary_labels_enumerated():
    g = CoxeterGraph("abc", [("a", "b", 4), ("b", "c", 4)])
    brute = sorted(g.label(x, y) for x in "ab" for y in "abc" if y not in "ab")
    assert brute == [2, 4]
    assert sorted(boundary_labels(g, {"a", "b"}).elements()) == brute


def test_boundary_labels_whole_component_all_twos():
    g = CoxeterGraph("abcd", [("a", "b", 5), ("c", "d", INF)])
    assert boundary_labels(g, {"a", "b"}) == {2: 4}


def test_boundary_labels_single_edge():
    assert boundary_labels(cat("A:2"), {"v0"}) == {3: 1}
    with pytest.raises(UnknownVertex):
        boundary_labels(cat("A:2"), {"zz"})


def test_graph_rejects_bad_construction():
    with pytest.raises(UnknownVertex):
        CoxeterGraph(["a"], [("a", "b", 3)])
    with pytest.raises(BadLabel):
        CoxeterGraph(["a", "b"], [("a", "b", 2)])
    with pytest.raises(SelfLoop):
        CoxeterGraph(["a"], [("a", "a", 3)])


def test_with_label_two_removes_edge():
    g = cat("A:2").with_label("v0", "v1", 2)
    assert g.edges() == [] and g.label("v0", "v1") == 2


def test_graph_is_hashable_and_value_equal():
    g1 = CoxeterGraph(["a", "b"], [("a", "b", 3)])
    g2 = CoxeterGraph(["a", "b"], [("b", "a", 3)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != CoxeterGraph(["b", "a"], [("a", "b", 3)])
