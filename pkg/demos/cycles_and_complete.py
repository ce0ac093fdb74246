#!/usr/bin/env python3
"""Distinguishing numbers of cycles and complete graphs, with witness labelings."""

from disting import graphs as gr
from disting.action import is_distinguishing

# A cycle needs three colors up to length 5, two from then on.
for n in range(3, 11):
    c = gr.cycle_graph(n)
    lab = gr.graph_distinguishing_labeling(c)
    print(f"C_{n}: D = {lab.num_colors()}  witness {lab.to_list()}")

# Hand-picked labelings for C_5 and C_6.
for n, colors in [(5, (1, 2, 3, 1, 2)), (6, (1, 1, 2, 2, 1, 2))]:
    ok = is_distinguishing(gr.graph_action(gr.cycle_graph(n)), gr.Labeling(colors))
    print(f"C_{n} with {colors}: distinguishing = {ok}")

# Every vertex of K_n needs its own color.
print("D(K_n):", [gr.graph_distinguishing_number(gr.complete_graph(n)) for n in range(1, 8)])

# Complements have the same automorphisms, hence the same D.
print("D(complement of C_6) =", gr.graph_distinguishing_number(gr.complement(gr.cycle_graph(6))))

# DOT for rendering the C_5 witness (pipe into `dot -Tpng`).
print(gr.to_dot(gr.cycle_graph(5), gr.graph_distinguishing_labeling(gr.cycle_graph(5)), name="C5"))
