#!/usr/bin/env python3
"""Realizing subgroups of S_n as stabilizers of labelings of ordered k-tuples."""

from disting import graphs as gr
from disting import powers as pw
from disting.catalog import subgroup_catalog
from disting.perm import alternating_group

square = [(1, 2), (2, 3), (3, 4), (4, 1)]
sym = pw.labeling_from_tuples(4, 2, square, symmetric=True)
print("unordered square edges ->", pw.realized_subgroup(sym))
ordered = pw.labeling_from_tuples(4, 2, square)
print("ordered square edges   ->", pw.realized_subgroup(ordered))

# A_4 needs triples: pairs only see S_4.
a4 = alternating_group(4)
for k in (1, 2, 3):
    print(f"{k}-closure of A_4 has order {pw.k_closure(a4, k).order}")
lab = pw.orbit_tuple_labeling(a4)
print("the A_4-orbit of (1,2,3):")
print(lab.describe().splitlines()[0])

# Graph automorphisms are the stabilizers of edge-count labelings of pairs.
prism = gr.complement(gr.cycle_graph(6))  # two triangles joined by a matching
print("\nprism", gr.write_graph6(prism), ": Aut order", gr.automorphism_group(prism).order,
      "= realized order", pw.realized_subgroup(pw.sym2_labeling(prism)).order)

for n in (3, 4, 5):
    print(f"density histogram for S_{n}:", pw.density_histogram(subgroup_catalog(n).subgroups))
