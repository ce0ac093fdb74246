#!/usr/bin/env python3
"""Two-color labelings cutting out a prescribed subgroup of an abelian group."""

from disting import action as act
from disting.catalog import subgroup_catalog
from disting.perm import generate_group, parse_generators


def group(n, gens):
    return generate_group(n, parse_generators(n, gens))


c4 = act.GroupAction.natural(group(4, "(1 2 3 4)"))
h = group(4, "(1 3)(2 4)")
lab = act.abelian_subgroup_labeling(c4, h)
print("C_4, H = <(1 3)(2 4)>: labeling", lab.to_list(), "stabilizer", act.label_stabilizer(c4, lab))

# With two orbits the same recipe can fall short, and then nothing works.
g = act.GroupAction.natural(group(4, "(1 2),(3 4)"))
h = group(4, "(1 2)(3 4)")
lab = act.abelian_subgroup_labeling(g, h)
print("<(1 2),(3 4)>, H = <(1 2)(3 4)>: stabilizer has order", act.label_stabilizer(g, lab).order,
      "; smallest realizable overgroup has order", act.labeling_closure(g, h).order)

for n in range(2, 7):
    cat = subgroup_catalog(n)
    total = missed = 0
    for gg in cat.subgroups:
        if not gg.is_abelian():
            continue
        a = act.GroupAction.natural(gg)
        for hh in cat.subgroups:
            if hh.is_subgroup_of(gg):
                total += 1
                missed += act.label_stabilizer(a, act.abelian_subgroup_labeling(a, hh)) != hh
    print(f"n={n}: {missed} of {total} (abelian G, H) pairs have no labeling with stabilizer H")
