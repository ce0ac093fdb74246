"""Every subgroup of S_n for small n, with conjugacy classes and an on-disk cache.

Enumeration seeds with the cyclic subgroups and closes under "join with a
cyclic subgroup" until nothing new appears. Only one representative per
conjugacy class is extended; whole classes are materialized by conjugation
as soon as a representative is found. Every subgroup is a chain of such joins
starting from the trivial group, and conjugating a chain gives a chain, so
no class is missed.

Elements are referred to by their index in the lexicographic listing of S_n
(``itertools.permutations(range(n))`` order). Cache files store subgroups as
lists of these indices.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .perm import Permutation, PermGroup

log = logging.getLogger(__name__)

CACHE_FORMAT = "disting-subgroups/1"
MAX_CATALOG_DEGREE = 7
LONG_RUN_DEGREE = 7


class CacheError(Exception):
    pass


class SymmetricTables:
    """Index-level arithmetic for S_n: multiplication, inverse and conjugation tables."""

    def __init__(self, n: int):
        self.n = n
        self.elements = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
        size = len(self.elements)
        self.size = size
        radix = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        codes = self.elements.astype(np.int64) @ radix
        lookup = np.full(n**n, -1, dtype=np.int32)
        lookup[codes] = np.arange(size, dtype=np.int32)
        self._lookup = lookup
        self._radix = radix
        dtype = np.int16 if size < 2**15 else np.int32
        # mul[a, b] = index of a∘b (b applied first)
        mul = np.empty((size, size), dtype=dtype)
        for a in range(size):
            mul[a] = lookup[self.elements[a][self.elements].astype(np.int64) @ radix]
        self.mul = mul
        self.identity = 0
        self.inv = np.argmax(mul == 0, axis=1).astype(dtype)

    def index_of(self, image) -> int:
        return int(self._lookup[int(np.asarray(image, dtype=np.int64) @ self._radix)])

    @property
    def conj(self) -> np.ndarray:
        """``conj[x, a]`` = index of ``x a x^-1``."""
        if not hasattr(self, "_conj"):
            out = np.empty_like(self.mul)
            for x in range(self.size):
                out[x] = self.mul[self.mul[x], self.inv[x]]
            self._conj = out
        return self._conj

    def closure(self, gens, start=None) -> np.ndarray:
        """Sorted element indices of the group generated by ``gens`` (and ``start``, a subgroup)."""
        gens = np.asarray(sorted(set(int(g) for g in gens)), dtype=np.int64)
        mask = np.zeros(self.size, dtype=bool)
        frontier = np.array([0], dtype=np.int64) if start is None else np.asarray(start, dtype=np.int64)
        mask[frontier] = True
        while len(frontier) and len(gens):
            prods = self.mul[frontier][:, gens].ravel()
            prods = np.unique(prods[~mask[prods]])
            mask[prods] = True
            frontier = prods.astype(np.int64)
        return np.flatnonzero(mask)

    def to_group(self, idx, gens) -> PermGroup:
        return PermGroup(
            self.n,
            [Permutation(self.elements[g]) for g in gens],
            self.elements[np.sort(np.asarray(idx))].copy(),
        )


@lru_cache(maxsize=None)
def symmetric_tables(n: int) -> SymmetricTables:
    return SymmetricTables(n)


@dataclass
class SubgroupCatalog:
    """All subgroups of S_n, ordered by (order, element indices)."""

    n: int
    subgroups: list[PermGroup]
    class_of: list[int]
    indices: list[np.ndarray] = field(repr=False, default_factory=list)

    @property
    def conjugacy_rep_indices(self) -> list[int]:
        first: dict[int, int] = {}
        for i, c in enumerate(self.class_of):
            first.setdefault(c, i)
        return sorted(first.values())

    def __len__(self) -> int:
        return len(self.subgroups)


def conjugacy_reps(catalog: SubgroupCatalog) -> list[PermGroup]:
    """One subgroup per S_n-conjugacy class: the first member in catalog order."""
    return [catalog.subgroups[i] for i in catalog.conjugacy_rep_indices]


def _enumerate(n: int, progress: bool = False) -> tuple[list[np.ndarray], list[list[int]], list[int]]:
    tab = symmetric_tables(n)
    known: dict[bytes, int] = {}
    members: list[np.ndarray] = []
    gens_of: list[list[int]] = []
    class_of: list[int] = []

    def key(idx: np.ndarray) -> bytes:
        return np.asarray(idx, dtype=np.int32).tobytes()

    def add_class(idx: np.ndarray, gens: list[int]) -> None:
        cls = max(class_of, default=-1) + 1
        conj = tab.conj
        seen_here = set()
        for x in range(tab.size):
            c = np.sort(conj[x, idx]).astype(np.int32)
            k = c.tobytes()
            if k in seen_here:
                continue
            seen_here.add(k)
            known[k] = len(members)
            members.append(c)
            gens_of.append([int(conj[x, g]) for g in gens])
            class_of.append(cls)

    cyclic: dict[bytes, int] = {}
    for g in range(1, tab.size):
        k = key(tab.closure([g]))
        cyclic.setdefault(k, g)
    cyclic_gens = sorted(cyclic.values())

    trivial = np.array([0], dtype=np.int32)
    add_class(trivial, [])
    queue = [(trivial, [])]
    while queue:
        idx, gens = queue.pop()
        mask = np.zeros(tab.size, dtype=bool)
        mask[idx] = True
        for g in cyclic_gens:
            if mask[g]:
                continue
            joined = tab.closure(gens + [g], start=idx).astype(np.int32)
            if key(joined) not in known:
                add_class(joined, gens + [g])
                queue.append((joined, gens + [g]))
                if progress:
                    print(f"S_{n}: {len(members)} subgroups found", file=sys.stderr)
    return members, gens_of, class_of


def _assemble(n: int, members, gens_of, class_of) -> SubgroupCatalog:
    tab = symmetric_tables(n)
    order = sorted(range(len(members)), key=lambda i: (len(members[i]), members[i].tolist()))
    remap = {}
    for c in (class_of[i] for i in order):
        remap.setdefault(c, len(remap))
    return SubgroupCatalog(
        n=n,
        subgroups=[tab.to_group(members[i], gens_of[i]) for i in order],
        class_of=[remap[class_of[i]] for i in order],
        indices=[np.asarray(members[i]) for i in order],
    )


def compute_catalog(n: int, progress: bool = False) -> SubgroupCatalog:
    members, gens_of, class_of = _enumerate(n, progress=progress)
    return _assemble(n, members, gens_of, class_of)


def default_cache_dir() -> Path:
    env = os.environ.get("DISTING_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "disting"


def cache_path(n: int, cache_dir=None) -> Path:
    return Path(cache_dir or default_cache_dir()) / f"subgroups_S{n}.json"


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def catalog_to_payload(cat: SubgroupCatalog) -> dict:
    tab = symmetric_tables(cat.n)
    payload = {
        "format": CACHE_FORMAT,
        "n": cat.n,
        "count": len(cat),
        "subgroups": [np.asarray(ix).tolist() for ix in cat.indices],
        "generators": [[tab.index_of(g.image) for g in h.generators] for h in cat.subgroups],
        "classes": list(cat.class_of),
    }
    payload["checksum"] = _checksum(payload)
    return payload


def catalog_from_payload(payload: dict) -> SubgroupCatalog:
    body = {k: v for k, v in payload.items() if k != "checksum"}
    if payload.get("format") != CACHE_FORMAT:
        raise CacheError(f"unknown cache format {payload.get('format')!r}")
    if payload.get("checksum") != _checksum(body):
        raise CacheError("checksum mismatch")
    n = int(payload["n"])
    subs = payload["subgroups"]
    if len(subs) != payload["count"] or len(payload["classes"]) != len(subs):
        raise CacheError("count mismatch")
    tab = symmetric_tables(n)
    return SubgroupCatalog(
        n=n,
        subgroups=[tab.to_group(ix, gens) for ix, gens in zip(subs, payload["generators"])],
        class_of=list(payload["classes"]),
        indices=[np.asarray(ix) for ix in subs],
    )


def write_catalog(cat: SubgroupCatalog, cache_dir=None) -> Path:
    """Atomic write: readers see the old file or the complete new one."""
    path = cache_path(cat.n, cache_dir)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(catalog_to_payload(cat), fh, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def read_catalog(n: int, cache_dir=None) -> SubgroupCatalog | None:
    path = cache_path(n, cache_dir)
    if not path.exists():
        return None
    try:
        with open(path) as fh:
            cat = catalog_from_payload(json.load(fh))
    except (CacheError, ValueError, KeyError, TypeError) as exc:
        log.warning("discarding corrupt subgroup cache %s: %s", path, exc)
        return None
    return cat if cat.n == n else None


_memory: dict[int, SubgroupCatalog] = {}


def subgroup_catalog(n: int, cache_dir=None, long_run: bool = False, use_cache: bool = True,
                     progress: bool = False) -> SubgroupCatalog:
    """All subgroups of S_n; read from cache when present and valid, else computed and cached."""
    if not 1 <= n <= MAX_CATALOG_DEGREE:
        raise ValueError(f"subgroup catalog supports 1 <= n <= {MAX_CATALOG_DEGREE}, got {n}")
    if n >= LONG_RUN_DEGREE and not long_run:
        raise ValueError(f"the S_{n} catalog is a long run; pass long_run=True")
    if n in _memory:
        return _memory[n]
    cat = read_catalog(n, cache_dir) if use_cache else None
    if cat is None:
        cat = compute_catalog(n, progress=progress)
        if use_cache:
            try:
                write_catalog(cat, cache_dir)
            except OSError as exc:
                log.warning("could not write subgroup cache: %s", exc)
    _memory[n] = cat
    return cat


def clear_cache(cache_dir=None) -> list[Path]:
    removed = []
    d = Path(cache_dir or default_cache_dir())
    for p in sorted(d.glob("subgroups_S*.json")):
        p.unlink()
        removed.append(p)
    _memory.clear()
    return removed
