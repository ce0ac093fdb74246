import itertools
import json
import random

import numpy as np
import pytest

from disting import graphs as gr
from disting import powers as pw
from disting.catalog import subgroup_catalog
from disting.graphs import Graph
from disting.perm import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    generate_group,
    parse_generators,
    symmetric_group,
    trivial_group,
)
from disting.verify import brute_force_automorphisms, random_digraph, random_multigraph

C4 = generate_group(4, parse_generators(4, "(1 2 3 4)"))
SQUARE = [(1, 2), (2, 3), (3, 4), (4, 1)]
# eleven of the twelve triples in the A_4-orbit of (1,2,3); (3,4,1) is left out
ELEVEN_A4 = [(1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 1, 4), (2, 3, 1), (2, 4, 3),
              (3, 1, 2), (3, 2, 4), (4, 1, 3), (4, 2, 1), (4, 3, 2)]


def test_tuple_ranks():
    assert pw.rank(4, (0, 0)) == 0 and pw.rank(4, (1, 2)) == 6
    tt = pw.tuples(3, 2)
    assert tt.shape == (9, 2) and all(pw.rank(3, t) == i for i, t in enumerate(tt))


def test_diagonal_action_is_homomorphism():
    g = symmetric_group(4).elements
    acted = pw.act_on_tuples(g, 4, 3)
    pos = {r.tobytes(): i for i, r in enumerate(g)}
    rng = random.Random(1)
    for _ in range(50):
        i, j = rng.randrange(24), rng.randrange(24)
        k = pos[g[i][g[j]].tobytes()]
        assert np.array_equal(acted[k], acted[i][acted[j]])


def test_square_examples():
    sym = pw.labeling_from_tuples(4, 2, SQUARE, symmetric=True)
    assert pw.realized_subgroup(sym) == dihedral_group(4)
    ordered = pw.labeling_from_tuples(4, 2, SQUARE)
    assert pw.realized_subgroup(ordered) == C4


def test_a4_example():
    lab = pw.orbit_tuple_labeling(alternating_group(4))
    ones = lab.class_of(1)
    assert len(ones) == 12
    assert set(ones) - set(ELEVEN_A4) == {(3, 4, 1)}
    assert pw.realized_subgroup(lab) == alternating_group(4)
    # the eleven triples alone pin down every point
    assert pw.realized_subgroup(pw.labeling_from_tuples(4, 3, ELEVEN_A4)).is_trivial()


def test_orbit_tuple_examples():
    lab = pw.orbit_tuple_labeling(trivial_group(3))
    assert lab.class_of(1) == [(1, 2)]
    assert pw.realized_subgroup(lab).is_trivial()
    lab = pw.orbit_tuple_labeling(symmetric_group(4))
    ones = lab.class_of(1)
    assert len(ones) == 24 and all(len(set(t)) == 3 for t in ones)
    assert pw.realized_subgroup(lab) == symmetric_group(4)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_orbit_tuple_realizes_every_subgroup(n):
    for h in subgroup_catalog(n).subgroups:
        assert pw.realized_subgroup(pw.orbit_tuple_labeling(h)) == h


def test_closure_examples():
    a4 = alternating_group(4)
    assert pw.k_closure(a4, 2) == symmetric_group(4)
    assert pw.k_closure(a4, 3) == a4
    for k in (1, 2, 3):
        assert pw.k_closure(symmetric_group(4), k) == symmetric_group(4)


def test_density_examples():
    assert pw.density(symmetric_group(4)) == 1
    assert pw.density(C4) == 2
    assert pw.density(alternating_group(4)) == 3
    assert pw.density(trivial_group(4)) == 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_closure_chain(n):
    for h in subgroup_catalog(n).subgroups:
        prev = symmetric_group(n)
        for k in range(1, n):
            cl = pw.k_closure(h, k)
            assert h.is_subgroup_of(cl) and cl.is_subgroup_of(prev)
            prev = cl
        assert prev == h
        assert pw.density(h) <= n - 1


def random_invariant_labeling(h, k, rng):
    """Merge the h-orbits of [n]^k at random into at most four colors."""
    orb = np.array(pw.orbit_labeling(h, k).colors)
    merge = {c: rng.randint(1, 4) for c in sorted(set(orb.tolist()))}
    return pw.PowerLabeling(h.n, k, tuple(merge[c] for c in orb.tolist()))


@pytest.mark.parametrize("n", [3, 4])
def test_orbit_partition_is_finest(n):
    rng = random.Random(n)
    for h in subgroup_catalog(n).subgroups:
        for k in (1, 2):
            cl = pw.k_closure(h, k)
            for _ in range(3):
                pl = random_invariant_labeling(h, k, rng)
                assert pw.is_invariant(pl, h)
                assert cl.is_subgroup_of(pw.realized_subgroup(pl))


def test_repeated_entry_tuples_do_not_change_closures():
    for h in subgroup_catalog(4).subgroups:
        for k in (2, 3):
            orb = np.array(pw.orbit_labeling(h, k).colors)
            tt = pw.tuples(4, k)
            injective = np.array([len(set(t)) == k for t in tt.tolist()])
            # collapse every non-injective tuple into one extra color
            colors = np.where(injective, orb, orb.max() + 1)
            assert pw.realized_subgroup(pw.PowerLabeling(4, k, tuple(colors.tolist()))) == pw.k_closure(h, k)


def test_density_histogram_s5():
    hist = pw.density_histogram(subgroup_catalog(5).subgroups)
    assert sum(hist.values()) == 156
    assert max(hist) <= 4
    assert hist == {1: 52, 2: 82, 3: 21, 4: 1}


def test_graph_pair_labelings():
    c4 = gr.cycle_graph(4)
    assert pw.realized_subgroup(pw.sym2_labeling(c4)).order == 8
    dc4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], kind="di")
    assert pw.realized_subgroup(pw.tensor2_labeling(dc4)) == C4
    assert pw.realized_subgroup(pw.sym2_labeling(gr.empty_graph(5))) == symmetric_group(5)
    with pytest.raises(ValueError):
        pw.sym2_labeling(dc4)


@pytest.mark.parametrize("n", range(1, 6))
def test_pair_labeling_realizes_automorphisms(n):
    for g in gr.enumerate_graphs(n):
        assert pw.realized_subgroup(pw.sym2_labeling(g)) == gr.automorphism_group(g)


def test_pair_labeling_multi_and_di():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 5)
        m = random_multigraph(rng, n)
        assert pw.realized_subgroup(pw.sym2_labeling(m)) == brute_force_automorphisms(m)
        d = random_digraph(rng, n)
        assert pw.realized_subgroup(pw.tensor2_labeling(d)) == brute_force_automorphisms(d)


def test_directed_four_cycle_is_not_an_undirected_automorphism_group():
    for g in gr.enumerate_graphs(4):
        assert gr.automorphism_group(g) != C4


def test_power_labeling_validation_and_json():
    with pytest.raises(ValueError):
        pw.PowerLabeling(3, 2, (1,) * 8)
    with pytest.raises(ValueError):
        pw.PowerLabeling(2, 2, (1, 2, 1, 1), symmetric=True)  # (1,2) and (2,1) differ
    with pytest.raises(ValueError):
        pw.labeling_from_tuples(3, 2, [(1, 4)])
    pl = pw.labeling_from_tuples(4, 2, SQUARE, symmetric=True)
    back = pw.PowerLabeling.from_dict(json.loads(pl.to_json()))
    assert back == pl
    assert pl.describe().splitlines()[0].startswith("1: (1,2), (1,4), (2,1)")


def test_size_limits():
    with pytest.raises(ValueError):
        pw.k_closure(symmetric_group(7), 1)
    with pytest.raises(ValueError):
        pw.k_closure(symmetric_group(6), 6)
