#!/usr/bin/env python3
"""Distinguishing polynomials and symmetric functions, and the Schur positivity scan."""

import sys

from disting import graphs as gr
from disting import symfun as sf

c4 = gr.graph_action(gr.cycle_graph(4))
poly = sf.distinguishing_counts(c4)
print("C_4 binomial coefficients:", poly.a, " f(r) for r=0..5:", [poly(r) for r in range(6)])
f = sf.dsf_monomial(c4)
print("C_4 DSF, monomial basis:", f)
print("C_4 DSF, Schur basis:   ", sf.monomial_to_schur(f))

print("\nKostka matrix for n=4:")
parts, k = sf.kostka_matrix(4)
for lam, row in zip(parts, k):
    print(f"  {lam.label():>5} " + " ".join(str(int(v)) for v in row))

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 6  # 7 takes a few minutes
rep = sf.scan_graphs_schur(n_max)
print(f"\nscan up to {n_max} vertices:")
print(rep.to_csv(), end="")
for e in rep.exceptions:
    print(f"  {e.graph6}: {e.dsf_schur}")
