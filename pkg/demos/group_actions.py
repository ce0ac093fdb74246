#!/usr/bin/env python3
"""Greedy labelings, tuple labelings and a few hand-built actions."""

import math

from disting import action as act
from disting.catalog import conjugacy_reps, subgroup_catalog
from disting.perm import symmetric_group

# S_n acting on n+2 points: naturally on 1..n, odd permutations also swap the last two.
for n in range(3, 7):
    a = act.sn_action_n_minus_1(n)
    print(f"n={n}: |X|={a.ground_size}  D={act.distinguishing_number(a)}")

# The greedy stabilizer labeling against the factorial bound, over the subgroups of S_4.
print("\norder  greedy  bound  D")
for h in conjugacy_reps(subgroup_catalog(4)):
    a = act.GroupAction.natural(h)
    used = act.greedy_stabilizer_label(a).max_label()
    print(f"{h.order:5d}  {used:6d}  {act.factorial_bound(h.order):5d}  {act.distinguishing_number(a)}")

# Depth-first variant: orbit sizes seen while stabilizing one point at a time.
lab, trace = act.dfs_variant_label(act.sn_action_n_minus_1(4))
print("\ndepth-first trace on the 6-point S_4 action:", trace)

# Colors that are k-tuples: the natural S_n action needs ceil(n^(1/k)) symbols per coordinate.
print("\n n  k=1 k=2 k=3")
for n in range(2, 9):
    a = act.GroupAction.natural(symmetric_group(n))
    row = [act.distinguishing_number_k(a, k) for k in (1, 2, 3)]
    assert row == [n, math.isqrt(n - 1) + 1, next(r for r in range(1, n + 1) if r**3 >= n)]
    print(f"{n:2d}  " + "  ".join(f"{v:2d}" for v in row))

# Faithful transitive actions of S_4 on at most 10 points, as coset actions.
print("\ntransitive S_4 actions:")
s4 = symmetric_group(4)
for h in conjugacy_reps(subgroup_catalog(4)):
    if 24 // h.order > act.MAX_GROUND:
        continue
    try:
        a = act.coset_action(s4, h)
    except act.ActionError:
        continue
    print(f"  cosets of {h.cycle_strings()}: {a.ground_size} points, D = {act.distinguishing_number(a)}")
