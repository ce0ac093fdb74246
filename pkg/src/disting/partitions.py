"""Integer partitions, set partitions as restricted growth strings, dominance order."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np


class IntegerPartition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> IntegerPartition:
        """Accepts ``"3,1,1"``, ``"(3, 1, 1)"`` or ``"3 1 1"``; parts are sorted."""
        tokens = text.replace("(", " ").replace(")", " ").replace(",", " ").split()
        return cls(sorted((int(t) for t in tokens), reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> IntegerPartition:
        if not self:
            return IntegerPartition()
        return IntegerPartition(sum(1 for p in self if p > i) for i in range(self[0]))

    def label(self) -> str:
        """Compact label used in DOT and reports: ``411``, or ``10,1`` when a part exceeds 9."""
        if any(p > 9 for p in self):
            return ",".join(map(str, self))
        return "".join(map(str, self)) or "0"

    def __repr__(self) -> str:
        return f"({','.join(map(str, self))})"


def partitions_of(n: int) -> list[IntegerPartition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [IntegerPartition(p) for p in rec(n, n)]


def dominates(lam: IntegerPartition, mu: IntegerPartition) -> bool:
    """``lam >= mu`` in dominance order (prefix sums, shorter side padded with zeros)."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different integers")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


dominance_leq = dominates


class SetPartition:
    """A set partition of ``{0..n-1}`` held as a canonical restricted growth string.

    ``block_of[i]`` is the 0-based block id of point ``i``; ids appear in
    first-use order. :meth:`colors` gives the 1-based version used for output.
    """

    __slots__ = ("block_of",)

    def __init__(self, block_of: Iterable[int]):
        block_of = tuple(int(b) for b in block_of)
        top = -1
        for b in block_of:
            if b > top + 1 or b < 0:
                raise ValueError(f"not a restricted growth string: {block_of}")
            top = max(top, b)
        self.block_of = block_of

    @classmethod
    def from_labels(cls, labels: Iterable) -> SetPartition:
        """Canonicalize any labeling (hashable colors) into its block structure."""
        ids: dict = {}
        return cls(ids.setdefault(c, len(ids)) for c in labels)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> SetPartition:
        labels = [None] * n
        for j, blk in enumerate(blocks):
            for x in blk:
                if labels[x] is not None:
                    raise ValueError(f"point {x} in two blocks")
                labels[x] = j
        if any(l is None for l in labels):
            raise ValueError("blocks do not cover the ground set")
        return cls.from_labels(labels)

    @property
    def ground_size(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of, default=-1) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i, b in enumerate(self.block_of):
            out[b].append(i)
        return [tuple(b) for b in out]

    def weight(self) -> IntegerPartition:
        return IntegerPartition(sorted(Counter(self.block_of).values(), reverse=True))

    def colors(self) -> tuple[int, ...]:
        return tuple(b + 1 for b in self.block_of)

    def __eq__(self, other) -> bool:
        return isinstance(other, SetPartition) and self.block_of == other.block_of

    def __hash__(self) -> int:
        return hash(self.block_of)

    def __lt__(self, other: SetPartition) -> bool:
        return self.block_of < other.block_of

    def __repr__(self) -> str:
        inner = "|".join("".join(str(i + 1) for i in b) if len(b) < 10 else ",".join(str(i + 1) for i in b)
                         for b in self.blocks())
        return f"SetPartition({inner})"


def restricted_growth_strings(n: int, max_blocks: int | None = None) -> Iterator[tuple[int, ...]]:
    """All RGS of length ``n`` with at most ``max_blocks`` blocks, lexicographically."""
    cap = n if max_blocks is None else max_blocks
    if n == 0:
        yield ()
        return
    if cap < 1:
        return
    word = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(word)
            return
        for b in range(min(top + 2, cap)):
            word[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(1, 0)


@lru_cache(maxsize=None)
def rgs_matrix(n: int) -> np.ndarray:
    """Every RGS of length ``n`` as rows of an int8 array, lexicographic; read-only."""
    arr = np.array(list(restricted_growth_strings(n)), dtype=np.int8).reshape(-1 if n else 1, n)
    arr.setflags(write=False)
    return arr


def rgs_weights(rgs: np.ndarray) -> list[IntegerPartition]:
    """Block-size type of each RGS row."""
    out = []
    for row in rgs:
        counts = np.bincount(row)
        out.append(IntegerPartition(sorted(counts[counts > 0].tolist(), reverse=True)))
    return out


def set_partitions_of_type(n: int, lam: IntegerPartition) -> Iterator[SetPartition]:
    """Every set partition of ``[n]`` whose block sizes form ``lam``, each once."""
    lam = IntegerPartition(lam)
    if lam.n != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    want = sorted(lam, reverse=True)
    k = len(want)
    sizes = [0] * k
    word = [0] * n
    target = Counter(want)

    # Block sizes are only known at the end, so prune on: no block already
    # larger than the largest part, and not too many blocks.
    def rec(i: int, top: int) -> Iterator[SetPartition]:
        if i == n:
            if Counter(sizes[: top + 1]) == target:
                yield SetPartition(word)
            return
        for b in range(min(top + 2, k)):
            if sizes[b] + 1 > want[0]:
                continue
            word[i] = b
            sizes[b] += 1
            yield from rec(i + 1, max(top, b))
            sizes[b] -= 1

    if n == 0:
        if not lam:
            yield SetPartition(())
        return
    yield from rec(0, -1)


def stirling2(n: int, k: int) -> int:
    @lru_cache(maxsize=None)
    def s(n: int, k: int) -> int:
        if n == k:
            return 1
        if k == 0 or k > n:
            return 0
        return k * s(n - 1, k) + s(n - 1, k - 1)

    return s(n, k)
