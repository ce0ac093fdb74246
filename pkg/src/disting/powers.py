"""Labelings of Cartesian powers ``[n]^k`` and the subgroups of S_n they cut out.

S_n acts on k-tuples entrywise. A labeling of ``[n]^k`` realizes the subgroup
of permutations preserving every tuple's color. Tuples are stored by
mixed-radix rank: ``(t_1, ..., t_k)`` has rank ``sum t_i * n**(k-i)``.

For a subgroup ``H``, the partition of ``[n]^k`` into ``H``-orbits is the
finest ``H``-invariant partition. Any ``H``-invariant labeling is constant on
those orbits, so whatever a permutation must preserve to respect the orbit
partition it also preserves for the coarser labeling: the orbit partition
realizes the smallest subgroup containing ``H`` available at power ``k`` (the
k-closure). Hence density can be computed from closures alone.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .graphs import Graph
from .perm import PermGroup, symmetric_group

MAX_N = 6
MAX_TUPLES = 6**5


@lru_cache(maxsize=None)
def tuples(n: int, k: int) -> np.ndarray:
    """All of ``[n]^k`` in rank order, shape ``(n**k, k)``."""
    arr = np.array(list(itertools.product(range(n), repeat=k)), dtype=np.int64).reshape(-1, k)
    arr.setflags(write=False)
    return arr


def _radix(n: int, k: int) -> np.ndarray:
    return n ** np.arange(k - 1, -1, -1, dtype=np.int64)


def rank(n: int, t: Iterable[int]) -> int:
    t = list(t)
    return int(np.asarray(t, dtype=np.int64) @ _radix(n, len(t))) if t else 0


def act_on_tuples(perms: np.ndarray, n: int, k: int) -> np.ndarray:
    """``out[g, r]`` = rank of ``perms[g]`` applied to tuple ``r``."""
    perms = np.asarray(perms, dtype=np.int64).reshape(-1, n)
    return perms[:, tuples(n, k)] @ _radix(n, k)


@dataclass(frozen=True)
class PowerLabeling:
    n: int
    k: int
    colors: tuple[int, ...]
    symmetric: bool = False

    def __post_init__(self):
        if len(self.colors) != self.n**self.k:
            raise ValueError(f"need {self.n ** self.k} colors, got {len(self.colors)}")
        if any(c < 1 for c in self.colors):
            raise ValueError("colors are positive integers")
        if self.symmetric:
            cols = np.asarray(self.colors)
            tt = tuples(self.n, self.k)
            for perm in itertools.permutations(range(self.k)):
                if not np.array_equal(cols[tt[:, perm] @ _radix(self.n, self.k)], cols):
                    raise ValueError("symmetric labeling is not constant on reordered tuples")

    def color(self, t: Iterable[int]) -> int:
        return self.colors[rank(self.n, t)]

    def class_of(self, color: int) -> list[tuple[int, ...]]:
        """Tuples (1-indexed) with the given color."""
        tt = tuples(self.n, self.k)
        return [tuple(int(x) + 1 for x in tt[r]) for r, c in enumerate(self.colors) if c == color]

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "symmetric": self.symmetric, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> PowerLabeling:
        return cls(int(d["n"]), int(d["k"]), tuple(int(c) for c in d["colors"]), bool(d.get("symmetric", False)))

    def describe(self) -> str:
        """One line per color, tuples listed as ``(1,2,3)``."""
        out = []
        for c in sorted(set(self.colors)):
            ts = self.class_of(c)
            out.append(f"{c}: " + ", ".join("(" + ",".join(map(str, t)) + ")" for t in ts))
        return "\n".join(out)


def labeling_from_tuples(n: int, k: int, ones: Iterable[Iterable[int]], symmetric: bool = False) -> PowerLabeling:
    """Color the listed 1-indexed tuples 1 and everything else 2.

    With ``symmetric`` every reordering of a listed tuple is colored 1 too.
    """
    colors = np.full(n**k, 2, dtype=np.int64)
    for t in ones:
        t = [int(x) - 1 for x in t]
        if len(t) != k or not all(0 <= x < n for x in t):
            raise ValueError(f"bad tuple {t}")
        variants = set(itertools.permutations(t)) if symmetric else {tuple(t)}
        for v in variants:
            colors[rank(n, v)] = 1
    return PowerLabeling(n, k, tuple(colors.tolist()), symmetric)


def _check_size(n: int, k: int) -> None:
    if n > MAX_N:
        raise ValueError(f"n must be at most {MAX_N}")
    if n**k > MAX_TUPLES:
        raise ValueError(f"[{n}]^{k} exceeds the tuple budget of {MAX_TUPLES}")


def _preserving(perms: np.ndarray, n: int, k: int, colors: np.ndarray) -> np.ndarray:
    keep = []
    for start in range(0, len(perms), 256):
        moved = act_on_tuples(perms[start:start + 256], n, k)
        keep.append((colors[moved] == colors).all(axis=1))
    return np.concatenate(keep) if keep else np.zeros(0, dtype=bool)


def realized_subgroup(pl: PowerLabeling) -> PermGroup:
    """Permutations of ``[n]`` whose diagonal action preserves every color."""
    _check_size(pl.n, pl.k)
    sn = symmetric_group(pl.n).elements
    mask = _preserving(sn, pl.n, pl.k, np.asarray(pl.colors))
    return PermGroup.from_elements(pl.n, sn[mask])


def orbit_labeling(h: PermGroup, k: int) -> PowerLabeling:
    """Color each ``h``-orbit of ``[n]^k`` by one plus its position among orbits (ordered by least rank)."""
    _check_size(h.n, k)
    ranks = act_on_tuples(h.elements, h.n, k)
    least = ranks.min(axis=0)
    _, ids = np.unique(least, return_inverse=True)
    return PowerLabeling(h.n, k, tuple((ids + 1).tolist()))


def is_invariant(pl: PowerLabeling, h: PermGroup) -> bool:
    return bool(_preserving(h.elements, pl.n, pl.k, np.asarray(pl.colors)).all())


def k_closure(h: PermGroup, k: int) -> PermGroup:
    """Largest subgroup of S_n with the same orbits as ``h`` on ``[n]^k``."""
    return realized_subgroup(orbit_labeling(h, k))


def density(h: PermGroup) -> int:
    """Least ``k`` such that some labeling of ``[n]^k`` realizes exactly ``h``."""
    if h.n > MAX_N:
        raise ValueError(f"n must be at most {MAX_N}")
    k = 1
    while k_closure(h, k) != h:
        k += 1
    return k


def orbit_tuple_labeling(h: PermGroup) -> PowerLabeling:
    """Color the ``h``-orbit of ``(1, 2, ..., n-1)`` in ``[n]^(n-1)`` with 1, the rest 2.

    A permutation keeping that orbit agrees with some ``h`` element on the
    first ``n - 1`` points, hence on all of them, so exactly ``h`` is realized.
    """
    n = h.n
    if n < 2:
        raise ValueError("needs n >= 2")
    _check_size(n, n - 1)
    start = rank(n, range(n - 1))
    orbit = np.unique(act_on_tuples(h.elements, n, n - 1)[:, start])
    colors = np.full(n ** (n - 1), 2, dtype=np.int64)
    colors[orbit] = 1
    return PowerLabeling(n, n - 1, tuple(colors.tolist()))


def sym2_labeling(g: Graph) -> PowerLabeling:
    """Unordered pair ``{i, j}`` colored by one plus the number of edges between ``i`` and ``j``."""
    if g.kind == "di":
        raise ValueError("use tensor2_labeling for digraphs")
    colors = (g.adj[tuples(g.n, 2)[:, 0], tuples(g.n, 2)[:, 1]] + 1).tolist()
    return PowerLabeling(g.n, 2, tuple(colors), symmetric=True)


def tensor2_labeling(g: Graph) -> PowerLabeling:
    """Ordered pair ``(i, j)`` colored by one plus the number of arcs from ``i`` to ``j``."""
    tt = tuples(g.n, 2)
    return PowerLabeling(g.n, 2, tuple((g.adj[tt[:, 0], tt[:, 1]] + 1).tolist()))


def density_histogram(groups: Iterable[PermGroup]) -> dict[int, int]:
    return dict(sorted(Counter(density(h) for h in groups).items()))
