#!/usr/bin/env python3
"""The consumption ordering on partitions of n, compared with dominance."""

import numpy as np

from disting.catalog import subgroup_catalog
from disting.consumption import (consumes, consumption_counterexample, consumption_poset, dominance_matrix,
                                 poset_to_dot)
from disting.perm import generate_group, parse_generators

klein = generate_group(4, parse_generators(4, "(1 2)(3 4),(1 3)(2 4)"))
print("Klein four group consumes (3,1):", consumes(klein, (3, 1)), " (2,2):", consumes(klein, (2, 2)))

for n in range(2, 7):
    cat = subgroup_catalog(n)  # S_6 takes a few seconds the first time, then comes from the cache
    p = consumption_poset(n, cat)
    same = np.array_equal(p.geq, dominance_matrix(n))
    print(f"\nn={n}: {len(cat)} subgroups, consumption {'equals' if same else 'is strictly weaker than'} dominance")
    for a, b in p.hasse_edges():
        print(f"  {a.label():>7} > {b.label()}")

cat6 = subgroup_catalog(6)
h = consumption_counterexample((4, 1, 1), (3, 3), cat6)
print("\n(4,1,1) dominates (3,3); a subgroup consuming (4,1,1) but not (3,3):", h.cycle_strings(), "order", h.order)

print()
print(poset_to_dot(consumption_poset(4, subgroup_catalog(4))))
