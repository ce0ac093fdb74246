"""Distinguishing partitions and the consumption ordering on partitions of n.

A subgroup ``H`` of S_n consumes ``lam`` when some set partition of ``[n]``
with block sizes ``lam`` is preserved blockwise only by the identity of ``H``.
``lam >=_c mu`` when every subgroup consuming ``lam`` also consumes ``mu``.

Consumption is invariant under conjugation (conjugating ``H`` by ``g`` and
moving the set partition by ``g`` preserves everything), so the quantifier
over all subgroups is evaluated on conjugacy class representatives.
:func:`consumed_partitions` can also be run on the full catalog to check this.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .action import distinguishing_mask
from .catalog import SubgroupCatalog, conjugacy_reps
from .partitions import IntegerPartition, SetPartition, dominates, partitions_of, rgs_matrix, rgs_weights
from .perm import PermGroup


def _type_table(n: int) -> tuple[np.ndarray, list[IntegerPartition]]:
    rgs = rgs_matrix(n)
    return rgs, rgs_weights(rgs)


def distinguishing_set_partitions(h: PermGroup) -> list[SetPartition]:
    """All set partitions of ``[n]`` distinguishing ``h``, in RGS order."""
    rgs, _ = _type_table(h.n)
    return [SetPartition(r) for r in rgs[distinguishing_mask(h.elements, rgs)]]


def consumed_partitions(h: PermGroup) -> set[IntegerPartition]:
    rgs, weights = _type_table(h.n)
    ok = distinguishing_mask(h.elements, rgs)
    return {weights[i] for i in np.flatnonzero(ok)}


def consuming_set_partition(h: PermGroup, lam) -> SetPartition | None:
    """The RGS-least set partition of type ``lam`` that distinguishes ``h``, if any."""
    lam = IntegerPartition(lam)
    if lam.n != h.n:
        raise ValueError(f"{lam} is not a partition of the degree {h.n}")
    rgs, weights = _type_table(h.n)
    rows = np.array([i for i, w in enumerate(weights) if w == lam], dtype=np.intp)
    ok = np.flatnonzero(distinguishing_mask(h.elements, rgs[rows]))
    return SetPartition(rgs[rows[ok[0]]]) if len(ok) else None


def consumes(h: PermGroup, lam) -> bool:
    return consuming_set_partition(h, lam) is not None


def min_consumed_length(h: PermGroup) -> int:
    """Fewest parts among consumed partitions; equals the distinguishing number of the natural action."""
    return min(len(lam) for lam in consumed_partitions(h))


def _check(catalog: SubgroupCatalog | None, n: int) -> SubgroupCatalog:
    if catalog is None:
        raise ValueError(f"a subgroup catalog for n={n} is required")
    if catalog.n != n:
        raise ValueError(f"catalog is for n={catalog.n}, not {n}")
    return catalog


def consumption_counterexample(lam, mu, catalog: SubgroupCatalog) -> PermGroup | None:
    """First class representative (catalog order) consuming ``lam`` but not ``mu``; None if ``lam >=_c mu``."""
    lam, mu = IntegerPartition(lam), IntegerPartition(mu)
    if lam.n != mu.n:
        raise ValueError("partitions of different integers")
    _check(catalog, lam.n)
    for h in conjugacy_reps(catalog):
        got = consumed_partitions(h)
        if lam in got and mu not in got:
            return h
    return None


def consumption_leq(lam, mu, catalog: SubgroupCatalog) -> bool:
    """``lam >=_c mu``."""
    return consumption_counterexample(lam, mu, catalog) is None


@dataclass
class ConsumptionPoset:
    n: int
    partitions: list[IntegerPartition]
    geq: np.ndarray  # geq[i, j]: partitions[i] >=_c partitions[j]
    witnesses: dict[tuple[int, int], PermGroup] = field(default_factory=dict)

    def index(self, lam) -> int:
        return self.partitions.index(IntegerPartition(lam))

    def relation(self, lam, mu) -> bool:
        return bool(self.geq[self.index(lam), self.index(mu)])

    def hasse_edges(self) -> list[tuple[IntegerPartition, IntegerPartition]]:
        """Cover relations ``(upper, lower)``, in partition-list order."""
        return [(self.partitions[i], self.partitions[j]) for i, j in transitive_reduction(self.geq)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "partitions": [list(p) for p in self.partitions],
            "relation": self.geq.astype(int).tolist(),
            "hasse_edges": [[list(a), list(b)] for a, b in self.hasse_edges()],
            "witnesses": [
                {"lambda": list(self.partitions[i]), "mu": list(self.partitions[j]),
                 "group": [g.cycle_string() for g in h.generators], "order": h.order}
                for (i, j), h in sorted(self.witnesses.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"


def transitive_reduction(geq: np.ndarray) -> list[tuple[int, int]]:
    """Cover pairs of a partial order given as a reflexive boolean matrix."""
    m = len(geq)
    strict = geq & ~np.eye(m, dtype=bool)
    out = []
    for i in range(m):
        for j in range(m):
            if strict[i, j] and not any(strict[i, k] and strict[k, j] for k in range(m)):
                out.append((i, j))
    return out


def consumption_poset(n: int, catalog: SubgroupCatalog, all_subgroups: bool = False) -> ConsumptionPoset:
    """The full ``>=_c`` relation on partitions of ``n`` with one witness per failed pair.

    ``all_subgroups`` evaluates the quantifier on every subgroup instead of
    class representatives (slower, same answer).
    """
    _check(catalog, n)
    parts = partitions_of(n)
    pos = {p: i for i, p in enumerate(parts)}
    groups = catalog.subgroups if all_subgroups else conjugacy_reps(catalog)
    m = len(parts)
    geq = np.ones((m, m), dtype=bool)
    witnesses: dict[tuple[int, int], PermGroup] = {}
    for h in groups:
        got = np.zeros(m, dtype=bool)
        got[[pos[p] for p in consumed_partitions(h)]] = True
        fail = got[:, None] & ~got[None, :]
        for i, j in zip(*np.nonzero(fail & geq)):
            witnesses[(int(i), int(j))] = h
        geq &= ~fail
    return ConsumptionPoset(n, parts, geq, witnesses)


def dominance_matrix(n: int) -> np.ndarray:
    parts = partitions_of(n)
    return np.array([[dominates(a, b) for b in parts] for a in parts], dtype=bool)


def poset_to_dot(p: ConsumptionPoset) -> str:
    lines = [f"digraph consumption_{p.n} {{", "  rankdir=TB;"]
    for lam in p.partitions:
        lines.append(f'  "{lam.label()}";')
    for a, b in p.hasse_edges():
        lines.append(f'  "{a.label()}" -> "{b.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
