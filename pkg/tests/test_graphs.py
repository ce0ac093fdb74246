import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from disting import graphs as gr
from disting.graphs import Graph, GraphFormatError
from disting.perm import symmetric_group
from disting.verify import brute_force_automorphisms


def graphs_on(n_max):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
            lambda bits: Graph.from_edges(n, [p for p, b in zip(itertools.combinations(range(n), 2), bits) if b])
        )
    )


# graph6 ----------------------------------------------------------------------


def test_graph6_examples():
    assert gr.parse_graph6("C~") == gr.complete_graph(4)
    g = gr.parse_graph6("@")
    assert g.n == 1 and g.num_edges() == 0
    assert sorted(gr.parse_graph6("Bg").edges()) == [(0, 1), (1, 2)]
    assert gr.parse_graph6(">>graph6<<C~") == gr.complete_graph(4)


@pytest.mark.parametrize("bad", ["", "C~~", "C", "Bh", "C\x7f", "C ~"])
def test_graph6_rejects(bad):
    with pytest.raises(GraphFormatError):
        gr.parse_graph6(bad)


@given(graphs_on(10))
def test_graph6_round_trip(g):
    s = gr.write_graph6(g)
    assert gr.parse_graph6(s) == g
    assert gr.write_graph6(gr.parse_graph6(s)) == s


def test_graph6_simple_only():
    with pytest.raises(GraphFormatError):
        gr.write_graph6(Graph.from_edges(2, [(0, 1), (0, 1)], kind="multi"))


def test_edgelist_round_trip_and_errors():
    g = gr.cycle_graph(5)
    text = gr.write_edgelist(g)
    assert text.splitlines()[0] == "5 5"
    assert gr.read_edgelist(text) == g
    m = gr.read_edgelist("2 2\n1 2\n1 2\n", kind="multi")
    assert m.adj[0, 1] == 2
    d = gr.read_edgelist("3 2 # header\n1 2\n2 3\n", kind="di")
    assert d.adj[0, 1] == 1 and d.adj[1, 0] == 0
    for bad in ["", "3\n1 2", "3 2\n1 2\n", "2 1\n1 3\n", "2 1\na b\n"]:
        with pytest.raises(GraphFormatError):
            gr.read_edgelist(bad)


def test_load_graph_dispatch():
    assert gr.load_graph("C~\n") == gr.complete_graph(4)
    assert gr.load_graph("3 2\n1 2\n2 3\n") == gr.path_graph(3)


def test_validation():
    with pytest.raises(ValueError):
        Graph([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        Graph([[1]])
    with pytest.raises(ValueError):
        Graph(np.zeros((11, 11), dtype=int))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_to_dot():
    dot = gr.to_dot(gr.path_graph(3))
    assert dot.startswith("graph G {") and "1 -- 2;" in dot and "2 -- 3;" in dot
    from disting.action import Labeling

    assert '[label="2:7"]' in gr.to_dot(gr.path_graph(3), Labeling((1, 7, 1)))
    assert "->" in gr.to_dot(Graph.from_edges(2, [(0, 1)], kind="di"))


# constructions ---------------------------------------------------------------


def test_constructions():
    assert gr.complement(gr.complete_graph(5)) == gr.empty_graph(5)
    g = gr.cycle_graph(6)
    assert gr.complement(gr.complement(g)) == g
    assert gr.induced_subgraph(gr.cycle_graph(5), [0, 1, 2]) == gr.path_graph(3)
    with pytest.raises(ValueError):
        gr.induced_subgraph(g, [])
    assert gr.cycle_graph(5).is_regular() and not gr.path_graph(3).is_regular()


# automorphisms ---------------------------------------------------------------


def test_automorphism_examples():
    assert gr.automorphism_group(gr.complete_graph(4)) == symmetric_group(4)
    assert gr.automorphism_group(gr.cycle_graph(5)).order == 10
    assert gr.automorphism_group(gr.path_graph(3)).order == 2


@settings(max_examples=60, deadline=None)
@given(graphs_on(6))
def test_automorphisms_match_brute_force(g):
    aut = gr.automorphism_group(g)
    assert aut == brute_force_automorphisms(g)
    assert all(gr.is_automorphism(g, row) for row in aut.elements)


def test_automorphisms_multi_and_di():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 5)
        adj = np.array([[rng.randint(0, 2) for _ in range(n)] for _ in range(n)])
        d = Graph(adj, kind="di")
        assert gr.automorphism_group(d) == brute_force_automorphisms(d)
        m = Graph(adj + adj.T, kind="multi")
        assert gr.automorphism_group(m) == brute_force_automorphisms(m)


def test_directed_cycle():
    d = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], kind="di")
    assert gr.automorphism_group(d).order == 4


# canonical forms and enumeration ---------------------------------------------


@settings(max_examples=60, deadline=None)
@given(graphs_on(7), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert gr.canonical_code(h) == gr.canonical_code(g)
    assert gr.is_isomorphic(g, h)
    assert gr.canonical_form(g) == gr.canonical_form(h)


def test_canonical_examples():
    k3k1 = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert not gr.is_isomorphic(k3k1, gr.path_graph(4))
    c4 = gr.cycle_graph(4)
    assert gr.canonical_graph6(c4.relabel([2, 1, 0, 3])) == gr.canonical_graph6(c4)
    # same degree sequence, not isomorphic
    assert not gr.is_isomorphic(gr.cycle_graph(6), Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def brute_classes(n):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        seen.add(gr.canonical_code(g))
    return seen


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_bitmask_scan(n):
    got = gr.enumerate_graphs(n)
    assert {gr.canonical_code(g) for g in got} == brute_classes(n)
    assert len(got) == len(brute_classes(n))


def test_enumeration_counts():
    assert [len(gr.enumerate_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


@pytest.mark.slow
def test_enumeration_count_seven():
    assert len(gr.enumerate_graphs(7)) == 1044


def test_enumeration_is_sorted_and_canonical():
    gs = gr.enumerate_graphs(5)
    codes = [gr.canonical_code(g) for g in gs]
    assert codes == sorted(codes)
    assert all(gr.canonical_form(g) == g for g in gs)


# distinguishing numbers --------------------------------------------------------


def test_distinguishing_examples():
    for n in range(1, 7):
        assert gr.graph_distinguishing_number(gr.complete_graph(n)) == n
    assert gr.graph_distinguishing_number(gr.cycle_graph(6)) == 2
    # smallest asymmetric graph has 6 vertices
    asym = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)])
    assert gr.automorphism_group(asym).is_trivial()
    assert gr.graph_distinguishing_number(asym) == 1
    lab = gr.graph_distinguishing_labeling(gr.cycle_graph(5))
    assert lab.num_colors() == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_complement_invariance(n):
    for g in gr.enumerate_graphs(n):
        assert gr.graph_distinguishing_number(g) == gr.graph_distinguishing_number(gr.complement(g))


@pytest.mark.parametrize("n", range(2, 7))
def test_vertex_deletion_bound(n):
    for g in gr.enumerate_graphs(n):
        d = gr.graph_distinguishing_number(g)
        for v in range(n):
            rest = [u for u in range(n) if u != v]
            assert gr.graph_distinguishing_number(gr.induced_subgraph(g, rest)) >= d - 1


def test_critical_examples():
    assert gr.is_distinguishing_critical(gr.complete_graph(2))
    assert not gr.is_distinguishing_critical(gr.path_graph(3))
    # K_6 plus a vertex joined to three of its vertices
    g = Graph.from_edges(7, list(itertools.combinations(range(6), 2)) + [(6, 0), (6, 1), (6, 2)])
    assert gr.graph_distinguishing_number(g) == 3
    assert gr.graph_distinguishing_number(gr.induced_subgraph(g, range(6))) == 6
    with pytest.raises(ValueError):
        gr.is_distinguishing_critical(gr.empty_graph(8))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_critical_graphs_are_vertex_transitive(n):
    memo = {}
    for g in gr.enumerate_graphs(n):
        if gr.is_distinguishing_critical(g, memo):
            assert gr.automorphism_group(g).is_transitive()
            assert g.is_regular()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_two_transitive_graphs_are_trivial(n):
    for g in gr.enumerate_graphs(n):
        if n >= 2 and gr.automorphism_group(g).is_two_transitive():
            assert g.num_edges() in (0, n * (n - 1) // 2)
