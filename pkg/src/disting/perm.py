"""Permutations of ``[n]`` and permutation groups materialized as element sets.

Points are 0-indexed internally. Every human-facing string (cycle notation,
reports) is 1-indexed.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_DEGREE = 10


class Permutation:
    """An immutable bijection of ``{0, ..., n-1}``."""

    __slots__ = ("image", "_hash")

    def __init__(self, image: Iterable[int]):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        self.image = image
        self._hash = hash(image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from 1-indexed cycles, e.g. ``[(1, 2), (3, 4)]``."""
        image = list(range(n))
        seen = set()
        for cyc in cycles:
            pts = [int(c) - 1 for c in cyc]
            for p in pts:
                if not 0 <= p < n:
                    raise ValueError(f"point {p + 1} outside [1, {n}]")
                if p in seen:
                    raise ValueError(f"point {p + 1} appears twice")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                image[a] = b
        return cls(image)

    @classmethod
    def parse(cls, n: int, text: str) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"`` or ``"(1,2,3)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))*", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [re.findall(r"\d+", c) for c in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(n, [c for c in cycles if c])

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(i) = p(q(i)): apply q first.
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(self.image[j] for j in other.image)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """0-indexed disjoint cycles, each starting at its least point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.image[i]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __lt__(self, other: Permutation) -> bool:
        return self.image < other.image

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, n={self.n})"


def parse_generators(n: int, text: str) -> list[Permutation]:
    """Parse a comma separated generator list such as ``"(1 2)(3 4),(1 3)(2 4)"``.

    Commas inside a cycle are allowed (``"(1,2,3),(1,2)"``); a top-level comma
    is one that directly follows a closing parenthesis.
    """
    parts = re.split(r"(?<=\))\s*,\s*", text.strip())
    return [Permutation.parse(n, p) for p in parts if p.strip()]


class PermGroup:
    """A subgroup of Sym(n), stored as the lexicographically sorted array of its elements.

    ``elements`` has shape ``(order, n)``; row ``i`` is the image array of the
    ``i``-th element. Row 0 is always the identity.
    """

    def __init__(self, n: int, generators: Sequence[Permutation], elements: np.ndarray):
        self.n = n
        self.generators = tuple(generators)
        self.elements = elements
        self.elements.setflags(write=False)

    @classmethod
    def from_elements(cls, n: int, rows: Iterable[Sequence[int]], generators=None) -> PermGroup:
        """Wrap an element set the caller knows to be closed; only the identity is checked."""
        arr = np.array(sorted(set(tuple(int(x) for x in r) for r in rows)), dtype=np.int8).reshape(-1, n)
        if not len(arr) or tuple(arr[0]) != tuple(range(n)):
            raise ValueError("element set must contain the identity")
        gens = generators if generators is not None else [Permutation(r) for r in arr[1:]]
        return cls(n, gens, arr)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return (Permutation(r) for r in self.elements)

    @cached_property
    def _keys(self) -> frozenset:
        return frozenset(r.tobytes() for r in self.elements)

    @cached_property
    def key(self) -> bytes:
        """Hashable identity of the element set."""
        return self.elements.tobytes()

    def __contains__(self, p: Permutation) -> bool:
        return p.n == self.n and np.array(p.image, dtype=np.int8).tobytes() in self._keys

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self.n == other.n and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.n, self.key))

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"PermGroup(n={self.n}, order={self.order}, gens=[{gens}])"

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.n == other.n and self._keys <= other._keys

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gens = [np.array(g.image) for g in self.generators]
        return all(np.array_equal(a[b], b[a]) for a, b in itertools.combinations(gens, 2))

    def conjugate(self, g: Permutation) -> PermGroup:
        """The group ``g H g^-1``."""
        ga = np.array(g.image)
        gi = np.argsort(ga)
        # (g h g^-1)(x) = g[h[g^-1[x]]]
        rows = ga[self.elements[:, gi]]
        return PermGroup.from_elements(self.n, rows, [g * h * g.inverse() for h in self.generators])

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits on ``[n]`` (0-indexed), ordered by least point."""
        seen: dict[int, int] = {}
        out = []
        for x in range(self.n):
            if x in seen:
                continue
            orb = tuple(sorted(set(self.elements[:, x].tolist())))
            for y in orb:
                seen[y] = len(out)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_two_transitive(self) -> bool:
        """Transitive on ordered pairs of distinct points."""
        if self.n < 2:
            return True
        pairs = {(int(r[0]), int(r[1])) for r in self.elements}
        return len(pairs) == self.n * (self.n - 1)

    def cycle_strings(self) -> list[str]:
        return [g.cycle_string() for g in self.generators]

    def small_generators(self) -> list[Permutation]:
        """Greedy generating set: scan elements in order, keep those not yet generated."""
        gens: list[Permutation] = []
        have = {tuple(range(self.n))}
        for row in self.elements[1:]:
            t = tuple(int(x) for x in row)
            if t not in have:
                gens.append(Permutation(t))
                have = _closure(self.n, [g.image for g in gens])
        return gens


def _closure(n: int, gens: Sequence[tuple[int, ...]]) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[i] for i in g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def generate_group(n: int, gens: Sequence[Permutation]) -> PermGroup:
    """Closure of ``gens`` under composition; finite, so inverses come for free."""
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} has degree {g.n}, expected {n}")
    elems = _closure(n, [g.image for g in gens])
    return PermGroup(n, list(gens), np.array(sorted(elems), dtype=np.int8).reshape(-1, n))


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return generate_group(1, [])
    if n == 2:
        return generate_group(2, [Permutation.from_cycles(2, [(1, 2)])])
    return generate_group(n, [Permutation.from_cycles(n, [(1, 2)]), Permutation.from_cycles(n, [range(1, n + 1)])])


def alternating_group(n: int) -> PermGroup:
    gens = [Permutation.from_cycles(n, [(1, 2, i)]) for i in range(3, n + 1)]
    return generate_group(n, gens)


def cyclic_group(n: int) -> PermGroup:
    """``<(1 2 ... n)>`` acting naturally."""
    return generate_group(n, [Permutation.from_cycles(n, [range(1, n + 1)])] if n > 1 else [])


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-cycle on vertices ``1..n`` (order ``2n`` for ``n >= 3``)."""
    rot = Permutation.from_cycles(n, [range(1, n + 1)])
    refl = Permutation([(-i) % n for i in range(n)])
    return generate_group(n, [rot, refl])


def trivial_group(n: int) -> PermGroup:
    return generate_group(n, [])


def is_normal(h: PermGroup, g: PermGroup) -> bool:
    """True iff ``x H x^-1 = H`` for every ``x`` in ``G``."""
    if h.n != g.n:
        raise ValueError("degree mismatch")
    if not h.is_subgroup_of(g):
        raise ValueError("h is not a subgroup of g")
    # Checking generators of G suffices.
    gens = list(g.generators) or []
    return all(h.conjugate(x) == h for x in gens)
