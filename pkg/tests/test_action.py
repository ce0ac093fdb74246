import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from disting import action as act
from disting.action import ActionError, GroupAction, Labeling
from disting.catalog import conjugacy_reps, subgroup_catalog
from disting.graphs import cycle_graph, graph_action
from disting.partitions import IntegerPartition, SetPartition
from disting.perm import (
    Permutation,
    cyclic_group,
    dihedral_group,
    generate_group,
    is_normal,
    parse_generators,
    symmetric_group,
    trivial_group,
)
from disting.action import factorial_bound
from disting.verify import naive_distinguishing_number, random_actions


def group(n, gens):
    return generate_group(n, parse_generators(n, gens))


def corpus():
    """Natural actions of the S_4 subgroups, the S_n construction, coset and random actions."""
    out = [GroupAction.natural(h) for h in subgroup_catalog(4).subgroups]
    out += [act.sn_action_n_minus_1(n) for n in (3, 4)]
    out += [act.coset_action(symmetric_group(4), group(4, "(1 2)(3 4),(3 4)"))]
    out += random_actions(10, seed=7)
    return out


CORPUS = corpus()


# construction --------------------------------------------------------------


def test_from_generators_checks_homomorphism():
    g = Permutation.parse(3, "(1 2 3)")
    with pytest.raises(ActionError):
        # a 3-cycle cannot map to a transposition
        GroupAction.from_generators([g], [Permutation.parse(2, "(1 2)")])


def test_from_generators_checks_faithfulness():
    t = Permutation.parse(3, "(1 2)")
    c = Permutation.parse(3, "(1 2 3)")
    # the sign action of S_3 on 2 points has the kernel A_3
    with pytest.raises(ActionError):
        GroupAction.from_generators([t, c], [Permutation.parse(2, "(1 2)"), Permutation.identity(2)])


def test_action_json_round_trip():
    a = act.sn_action_n_minus_1(4)
    d = json.loads(json.dumps(a.to_dict()))
    b = GroupAction.from_dict(d)
    assert b.ground_size == 6 and b.order == 24
    assert np.array_equal(a.images, b.images)


@pytest.mark.parametrize("a", CORPUS[:40])
def test_images_form_homomorphism(a):
    g = a.group.elements
    pos = {r.tobytes(): i for i, r in enumerate(g)}
    for i, j in itertools.islice(itertools.product(range(a.order), repeat=2), 300):
        k = pos[g[i][g[j]].tobytes()]
        assert np.array_equal(a.images[k], a.images[i][a.images[j]])


# orbits and stabilizers ------------------------------------------------------


def test_orbits_examples():
    assert act.orbits(GroupAction.natural(symmetric_group(3))).blocks() == [(0, 1, 2)]
    assert act.orbits(GroupAction.natural(trivial_group(3))).blocks() == [(0,), (1,), (2,)]
    assert act.orbits(act.sn_action_n_minus_1(3)).blocks() == [(0, 1, 2), (3, 4)]


def test_pointwise_stabilizer_examples():
    s3 = GroupAction.natural(symmetric_group(3))
    assert act.pointwise_stabilizer(s3, [0]).order == 2
    assert act.pointwise_stabilizer(s3, []).order == 6
    t = act.sn_action_n_minus_1(3)
    stab = act.pointwise_stabilizer(t, [3])
    assert stab.order == 3 and all(Permutation(r).sign() == 1 for r in stab.elements)


@pytest.mark.parametrize("a", CORPUS)
def test_orbit_stabilizer(a):
    for blk in act.orbits(a).blocks():
        for x in blk:
            assert a.order == len(blk) * act.pointwise_stabilizer(a, [x]).order


@pytest.mark.parametrize("a", CORPUS)
def test_orbit_pointwise_stabilizer_is_normal(a):
    for blk in act.orbits(a).blocks():
        assert is_normal(act.pointwise_stabilizer(a, blk), a.group)


def test_label_stabilizer_examples():
    c5 = graph_action(cycle_graph(5))
    assert act.label_stabilizer(c5, Labeling((1, 1, 1, 1, 1))).order == 10
    assert act.label_stabilizer(c5, Labeling((1, 2, 3, 4, 5))).is_trivial()
    assert act.label_stabilizer(c5, Labeling((1, 2, 3, 1, 2))).is_trivial()


def test_is_distinguishing_known_labelings():
    assert act.is_distinguishing(graph_action(cycle_graph(5)), Labeling((1, 2, 3, 1, 2)))
    assert act.is_distinguishing(graph_action(cycle_graph(6)), Labeling((1, 1, 2, 2, 1, 2)))
    assert not act.is_distinguishing(GroupAction.natural(cyclic_group(4)), Labeling((1, 1, 1, 1)))


def test_labeling_size_mismatch():
    with pytest.raises(ActionError):
        act.is_distinguishing(GroupAction.natural(cyclic_group(4)), Labeling((1, 2, 3)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_recoloring_invariance(a, data):
    colors = data.draw(st.lists(st.integers(1, 3), min_size=a.ground_size, max_size=a.ground_size))
    perm = data.draw(st.permutations([1, 2, 3]))
    renamed = [perm[c - 1] for c in colors]
    assert act.is_distinguishing(a, Labeling(tuple(colors))) == act.is_distinguishing(a, Labeling(tuple(renamed)))
    assert act.label_stabilizer(a, Labeling(tuple(colors))) == act.label_stabilizer(a, Labeling(tuple(renamed)))


# distinguishing numbers ------------------------------------------------------


@pytest.mark.parametrize("n, d", [(3, 3), (4, 3), (5, 3), (6, 2), (7, 2)])
def test_dihedral_on_cycle(n, d):
    assert act.distinguishing_number(GroupAction.natural(dihedral_group(n))) == d


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_sn_construction(n):
    a = act.sn_action_n_minus_1(n)
    assert a.ground_size == n + 2 and a.order == np.prod(range(1, n + 1))
    assert act.distinguishing_number(a) == n - 1
    # odd permutations swap the two extra points
    for row, img in zip(a.group.elements, a.images):
        swapped = img[n] == n + 1
        assert swapped == (Permutation(row).sign() == -1)


def test_sn_construction_contains_full_symmetric_block():
    a = act.sn_action_n_minus_1(5)
    assert a.restricted_to(range(5)).order == 120


def test_sn_construction_rejects_small():
    with pytest.raises(ValueError):
        act.sn_action_n_minus_1(2)


@pytest.mark.parametrize("a", CORPUS)
def test_witness_is_minimal_and_distinguishing(a):
    lab = act.find_distinguishing_labeling(a)
    d = act.distinguishing_number(a)
    assert act.is_distinguishing(a, lab) and lab.num_colors() == d
    # the witness is a canonical RGS: colors appear in first-use order
    assert SetPartition.from_labels(lab.colors).colors() == lab.colors


@pytest.mark.parametrize("a", random_actions(12, seed=99))
def test_against_naive_oracle(a):
    assert act.distinguishing_number(a) == naive_distinguishing_number(a)


@pytest.mark.parametrize("a", CORPUS)
def test_orbit_gluing(a):
    blocks = act.orbits(a).blocks()
    if len(blocks) < 2:
        return
    o = blocks[0]
    rest = [x for b in blocks[1:] for x in b]
    d1 = act.distinguishing_number(a.restricted_to(o))
    d2 = act.distinguishing_number(a.restricted_to(rest))
    assert act.distinguishing_number(a) <= max(d1, d2)


# tuple labelings ---------------------------------------------------------------


@pytest.mark.parametrize("n, k, d", [(4, 2, 2), (4, 1, 4), (5, 2, 3), (8, 3, 2), (7, 3, 2), (6, 2, 3)])
def test_dk_natural(n, k, d):
    a = GroupAction.natural(symmetric_group(n))
    assert act.distinguishing_number_k(a, k) == d
    lab = act.find_distinguishing_labeling_k(a, k)
    assert lab.width == k and lab.max_label() == d
    assert act.is_distinguishing(a, lab)


@pytest.mark.parametrize("a", CORPUS[::4])
def test_dk_monotone(a):
    vals = [act.distinguishing_number_k(a, k) for k in (1, 2, 3)]
    assert vals[0] == act.distinguishing_number(a)
    assert vals[0] >= vals[1] >= vals[2]


# greedy and depth-first labelings ---------------------------------------------


def test_greedy_examples():
    assert act.greedy_stabilizer_label(GroupAction.natural(trivial_group(5))).colors == (1,) * 5
    lab = act.greedy_stabilizer_label(GroupAction.natural(symmetric_group(3)))
    assert lab.num_colors() == 3
    klein = GroupAction.natural(group(4, "(1 2)(3 4),(1 3)(2 4)"))
    lab = act.greedy_stabilizer_label(klein)
    assert lab.max_label() <= 3 and act.is_distinguishing(klein, lab)
    assert act.distinguishing_number(klein) == 2


@pytest.mark.parametrize("a", CORPUS)
def test_greedy_bound(a):
    lab = act.greedy_stabilizer_label(a)
    assert act.is_distinguishing(a, lab)
    assert lab.max_label() <= factorial_bound(a.order)


def test_dfs_traces():
    for n in range(2, 7):
        lab, trace = act.dfs_variant_label(GroupAction.natural(symmetric_group(n)))
        assert trace == list(range(n, 1, -1))
    assert act.dfs_variant_label(GroupAction.natural(trivial_group(4)))[1] == []
    lab, trace = act.dfs_variant_label(act.sn_action_n_minus_1(4))
    assert trace[:2] == [4, 3]


@pytest.mark.parametrize("a", CORPUS)
def test_dfs_distinguishes(a):
    lab, trace = act.dfs_variant_label(a)
    assert act.is_distinguishing(a, lab)
    assert all(s >= 2 for s in trace)


def test_dfs_custom_order():
    a = act.sn_action_n_minus_1(3)
    lab, trace = act.dfs_variant_label(a, orbit_order=[1, 0])
    assert trace[0] == 2 and act.is_distinguishing(a, lab)


# abelian subgroups -------------------------------------------------------------


def test_abelian_examples():
    c4 = GroupAction.natural(group(4, "(1 2 3 4)"))
    h = group(4, "(1 3)(2 4)")
    lab = act.abelian_subgroup_labeling(c4, h)
    assert lab.colors == (1, 2, 1, 2)
    assert act.label_stabilizer(c4, lab) == h
    assert act.label_stabilizer(c4, act.abelian_subgroup_labeling(c4, c4.group)) == c4.group
    c3 = GroupAction.natural(group(3, "(1 2 3)"))
    lab = act.abelian_subgroup_labeling(c3, trivial_group(3))
    assert lab.colors == (1, 2, 2) and act.label_stabilizer(c3, lab).is_trivial()


def test_abelian_errors():
    with pytest.raises(ActionError):
        act.abelian_subgroup_labeling(GroupAction.natural(symmetric_group(3)), trivial_group(3))
    with pytest.raises(ActionError):
        act.abelian_subgroup_labeling(GroupAction.natural(cyclic_group(4)), group(4, "(1 2)"))


def transitive_abelian_pairs():
    for n in range(2, 7):
        cat = subgroup_catalog(n)
        for g in cat.subgroups:
            if g.is_abelian() and g.is_transitive():
                for h in cat.subgroups:
                    if h.is_subgroup_of(g):
                        yield g, h


def test_abelian_exact_on_transitive_actions():
    count = 0
    for g, h in transitive_abelian_pairs():
        a = GroupAction.natural(g)
        lab = act.abelian_subgroup_labeling(a, h)
        assert lab.max_label() <= 2
        assert act.label_stabilizer(a, lab) == h
        count += 1
    assert count > 50


def test_abelian_intransitive_counterexample():
    # Two orbits {1,2}, {3,4}; a labeling kept by (1 2)(3 4) is constant on both, so (1 2) keeps it too.
    g = group(4, "(1 2),(3 4)")
    h = group(4, "(1 2)(3 4)")
    a = GroupAction.natural(g)
    lab = act.abelian_subgroup_labeling(a, h)
    assert act.label_stabilizer(a, lab) == g
    assert act.labeling_closure(a, h) == g
    for colors in itertools.product(range(1, 5), repeat=4):
        assert act.label_stabilizer(a, Labeling(colors)) != h


@pytest.mark.parametrize("n", [4, 5])
def test_abelian_construction_is_optimal(n):
    # whenever the construction misses h, no labeling at all realizes h
    cat = subgroup_catalog(n)
    for g in cat.subgroups:
        if not g.is_abelian():
            continue
        a = GroupAction.natural(g)
        for h in cat.subgroups:
            if h.is_subgroup_of(g):
                got = act.label_stabilizer(a, act.abelian_subgroup_labeling(a, h))
                assert (got == h) == (act.labeling_closure(a, h) == h)


# lambda-fixing sets --------------------------------------------------------------


def test_lambda_fixing_examples():
    s3 = GroupAction.natural(symmetric_group(3))
    assert act.is_lambda_fixing_set(s3, [0, 1, 2], IntegerPartition((1, 1, 1)))
    assert not act.is_lambda_fixing_set(s3, [0, 1], IntegerPartition((2,)))
    assert act.is_lambda_fixing_set(s3, [0, 1], IntegerPartition((1, 1)))
    with pytest.raises(ValueError):
        act.is_lambda_fixing_set(s3, [0, 1], IntegerPartition((1,)))


def test_lambda_fixing_whole_set_matches_consumption():
    from disting.consumption import consumes

    for h in conjugacy_reps(subgroup_catalog(4)):
        a = GroupAction.natural(h)
        for lam in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
            assert act.is_lambda_fixing_set(a, range(4), IntegerPartition(lam)) == consumes(h, lam)


# S_4 with distinguishing number 3 ------------------------------------------------


def test_s4_faithful_transitive_actions():
    s4 = symmetric_group(4)
    found = {}
    for h in conjugacy_reps(subgroup_catalog(4)):
        if 24 // h.order > act.MAX_GROUND:
            continue
        try:
            a = act.coset_action(s4, h)
        except ActionError:
            continue  # core is nontrivial
        found[(a.ground_size, h.order, tuple(h.cycle_strings()))] = act.distinguishing_number(a)
    assert sorted(found.values()) == [2, 3, 3, 4]
    assert {k[0] for k, v in found.items() if v == 3} == {6}


def test_coset_action_of_trivial_subgroup_is_regular():
    a = act.coset_action(symmetric_group(3), trivial_group(3))
    assert a.ground_size == 6 and act.orbits(a).num_blocks == 1
    assert act.distinguishing_number(a) == 2
