"""Faithful finite group actions and distinguishing labelings.

A :class:`GroupAction` pairs an abstract group (realized as a
:class:`~disting.perm.PermGroup` on its own points) with a homomorphism into
Sym(X). Because actions are faithful, every question about labelings is
answered on the image group, held as the ``images`` array aligned row for row
with ``group.elements``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .partitions import IntegerPartition, SetPartition, restricted_growth_strings, set_partitions_of_type
from .perm import Permutation, PermGroup, generate_group, symmetric_group

MAX_GROUND = 10
_CHUNK = 4096


class ActionError(ValueError):
    pass


class GroupAction:
    def __init__(self, group: PermGroup, ground_size: int, images: np.ndarray):
        self.group = group
        self.ground_size = ground_size
        self.images = images
        self.images.setflags(write=False)
        self._row = {r.tobytes(): i for i, r in enumerate(group.elements)}

    @classmethod
    def from_generators(cls, group_gens: Sequence[Permutation], images: Sequence[Permutation],
                        degree: int | None = None, ground_size: int | None = None) -> GroupAction:
        """Build from generator images; the homomorphism and faithfulness are checked here."""
        if len(group_gens) != len(images):
            raise ActionError("need one image per generator")
        if degree is None:
            if not group_gens:
                raise ActionError("degree required when there are no generators")
            degree = group_gens[0].n
        if ground_size is None:
            if not images:
                raise ActionError("ground_size required when there are no generators")
            ground_size = images[0].n
        if any(g.n != degree for g in group_gens) or any(p.n != ground_size for p in images):
            raise ActionError("inconsistent degrees among generators or images")
        if ground_size > MAX_GROUND:
            raise ActionError(f"ground set larger than {MAX_GROUND}")
        group = generate_group(degree, group_gens)
        # Close the set of pairs (g, act(g)); the map is well defined iff the
        # closure is no larger than the group itself.
        pairs = [g.image + p.image for g, p in zip(group_gens, images)]
        ident = tuple(range(degree)) + tuple(range(ground_size))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for b in pairs:
                    c = tuple(a[i] for i in b[:degree]) + tuple(a[degree + i] for i in b[degree:])
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        if len(seen) != group.order:
            raise ActionError("generator images do not define a homomorphism")
        by_elem = {c[:degree]: c[degree:] for c in seen}
        rows = np.array([by_elem[tuple(int(x) for x in r)] for r in group.elements], dtype=np.int8)
        rows = rows.reshape(group.order, ground_size)
        if len({r.tobytes() for r in rows}) != group.order:
            raise ActionError("action is not faithful")
        return cls(group, ground_size, rows)

    @classmethod
    def natural(cls, group: PermGroup) -> GroupAction:
        return cls(group, group.n, group.elements.copy())

    @property
    def order(self) -> int:
        return self.group.order

    def image(self, g: Permutation) -> Permutation:
        return Permutation(self.images[self._row[np.array(g.image, dtype=np.int8).tobytes()]])

    def rows_of(self, h: PermGroup) -> np.ndarray:
        """Row indices of the elements of subgroup ``h``."""
        try:
            return np.array([self._row[r.tobytes()] for r in h.elements])
        except KeyError:
            raise ActionError("not a subgroup of the acting group") from None

    def image_group(self) -> PermGroup:
        return PermGroup.from_elements(self.ground_size, self.images.tolist())

    def subgroup(self, rows: np.ndarray) -> PermGroup:
        rows = np.sort(np.asarray(rows))
        elems = self.group.elements[rows].copy()
        return PermGroup(self.group.n, [Permutation(r) for r in elems[1:]], elems)

    def restrict(self, h: PermGroup) -> GroupAction:
        return GroupAction(h, self.ground_size, self.images[self.rows_of(h)].copy())

    def restricted_to(self, subset: Iterable[int]) -> GroupAction:
        """The faithful action of the image of the group on an invariant subset.

        Points of the subset are renumbered in increasing order.
        """
        pts = sorted(set(subset))
        pos = {x: i for i, x in enumerate(pts)}
        sub = self.images[:, pts]
        if not all(int(y) in pos for y in np.unique(sub)):
            raise ActionError("subset is not invariant")
        rows = {tuple(pos[int(y)] for y in r) for r in sub}
        group = PermGroup.from_elements(len(pts), rows)
        return GroupAction.natural(group)

    def to_dict(self) -> dict:
        return {
            "degree": self.group.n,
            "generators": [g.cycle_string() for g in self.group.generators],
            "ground_size": self.ground_size,
            "images": [self.image(g).cycle_string() for g in self.group.generators],
        }

    @classmethod
    def from_dict(cls, d: dict) -> GroupAction:
        degree, ground = int(d["degree"]), int(d["ground_size"])
        gens = [Permutation.parse(degree, s) for s in d["generators"]]
        imgs = [Permutation.parse(ground, s) for s in d["images"]]
        return cls.from_generators(gens, imgs, degree=degree, ground_size=ground)

    def __repr__(self) -> str:
        return f"GroupAction(order={self.order}, ground_size={self.ground_size})"


@dataclass(frozen=True)
class Labeling:
    """Colors of the ground points, 1-based; each color is an int, or a tuple of ints for width > 1."""

    colors: tuple

    @property
    def ground_size(self) -> int:
        return len(self.colors)

    @property
    def width(self) -> int:
        c = self.colors[0] if self.colors else 1
        return len(c) if isinstance(c, tuple) else 1

    def num_colors(self) -> int:
        return len(set(self.colors))

    def max_label(self) -> int:
        if self.width == 1:
            return max(self.colors, default=0)
        return max((max(c) for c in self.colors), default=0)

    def type(self) -> IntegerPartition:
        return SetPartition.from_labels(self.colors).weight()

    def to_list(self) -> list:
        return [list(c) if isinstance(c, tuple) else c for c in self.colors]


def _codes(labels: Labeling | Sequence) -> np.ndarray:
    colors = labels.colors if isinstance(labels, Labeling) else tuple(labels)
    return np.array(SetPartition.from_labels(colors).block_of, dtype=np.int64)


def _nontrivial_order(images: np.ndarray) -> np.ndarray:
    """Non-identity rows sorted by number of moved points; small supports kill candidates fastest."""
    moved = (images != np.arange(images.shape[1])).sum(axis=1)
    idx = np.flatnonzero(moved)
    return idx[np.argsort(moved[idx], kind="stable")]


def distinguishing_mask(images: np.ndarray, labelings: np.ndarray) -> np.ndarray:
    """For each row of ``labelings`` (integer codes on the ground set), whether it is distinguishing."""
    labelings = np.asarray(labelings)
    alive = np.ones(len(labelings), dtype=bool)
    order = _nontrivial_order(images)
    for start in range(0, len(order), 64):
        if not alive.any():
            break
        chunk = images[order[start:start + 64]].astype(np.intp)
        live = np.flatnonzero(alive)
        lab = labelings[live]
        moved = lab[:, chunk]  # (live, chunk, X)
        preserved = (moved == lab[:, None, :]).all(axis=2).any(axis=1)
        alive[live[preserved]] = False
    return alive


def stabilizer_rows(images: np.ndarray, codes: np.ndarray) -> np.ndarray:
    return np.flatnonzero((codes[images.astype(np.intp)] == codes).all(axis=1))


def orbits(a: GroupAction) -> SetPartition:
    """Orbits of the ground set, blocks in order of least point."""
    labels = [-1] * a.ground_size
    k = 0
    for x in range(a.ground_size):
        if labels[x] < 0:
            for y in np.unique(a.images[:, x]):
                labels[int(y)] = k
            k += 1
    return SetPartition(labels)


def pointwise_stabilizer(a: GroupAction, s: Iterable[int]) -> PermGroup:
    s = sorted(set(s))
    rows = np.flatnonzero((a.images[:, s] == np.array(s)).all(axis=1)) if s else np.arange(a.order)
    return a.subgroup(rows)


def label_stabilizer(a: GroupAction, labeling: Labeling) -> PermGroup:
    """Group elements whose action preserves every color (componentwise for tuple colors)."""
    if labeling.ground_size != a.ground_size:
        raise ActionError("labeling size does not match the ground set")
    return a.subgroup(stabilizer_rows(a.images, _codes(labeling)))


def is_distinguishing(a: GroupAction, labeling: Labeling) -> bool:
    if labeling.ground_size != a.ground_size:
        raise ActionError("labeling size does not match the ground set")
    return len(stabilizer_rows(a.images, _codes(labeling))) == 1


def find_distinguishing_labeling(a: GroupAction) -> Labeling:
    """A distinguishing labeling with the fewest colors.

    Candidates are restricted growth strings in lexicographic order, so the
    witness is the lexicographically least one among minimal labelings.
    """
    n = a.ground_size
    if a.order == 1:
        return Labeling((1,) * n)
    for r in range(2, n + 1):
        batch: list[tuple[int, ...]] = []
        for w in restricted_growth_strings(n, r):
            if max(w) != r - 1:
                continue
            batch.append(w)
            if len(batch) == _CHUNK:
                hit = _first_hit(a.images, batch)
                if hit is not None:
                    return hit
                batch = []
        if batch:
            hit = _first_hit(a.images, batch)
            if hit is not None:
                return hit
    raise AssertionError("unreachable for a faithful action")


def _first_hit(images: np.ndarray, batch) -> Labeling | None:
    ok = np.flatnonzero(distinguishing_mask(images, np.array(batch, dtype=np.int8)))
    if len(ok):
        return Labeling(tuple(b + 1 for b in batch[ok[0]]))
    return None


def distinguishing_number(a: GroupAction) -> int:
    return find_distinguishing_labeling(a).max_label()


def _digits(x: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(x % base + 1)
        x //= base
    return tuple(reversed(out))


def find_distinguishing_labeling_k(a: GroupAction, k: int) -> Labeling:
    """Minimal distinguishing labeling by ``k``-tuples over ``{1..r}``.

    A tuple labeling is preserved exactly when the scalar labeling by the
    tuples themselves is, so ``r`` is the least value with ``r**k >= D``; the
    scalar witness is re-encoded in base ``r``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    base = find_distinguishing_labeling(a)
    d = base.max_label()
    r = 1
    while r**k < d:
        r += 1
    return Labeling(tuple(_digits(c - 1, r, k) for c in base.colors)) if k > 1 else base


def distinguishing_number_k(a: GroupAction, k: int) -> int:
    return find_distinguishing_labeling_k(a, k).max_label()


def greedy_stabilizer_label(a: GroupAction) -> Labeling:
    """Greedy stabilizer-chain labeling: every pass fixes one point of each nontrivial orbit.

    The representative of an orbit is its least point. Uses at most ``k``
    labels whenever the group has order at most ``k!``.
    """
    labels = [1] * a.ground_size
    remaining = list(range(a.ground_size))
    rows = np.arange(a.order)
    i = 1
    while True:
        imgs = a.images[rows]
        if (imgs[:, remaining] == np.array(remaining)).all():
            break
        chosen = []
        seen: set[int] = set()
        for x in remaining:
            if x in seen:
                continue
            orb = set(np.unique(imgs[:, x]).tolist())
            seen |= orb
            if len(orb) > 1:
                chosen.append(x)
        for x in chosen:
            labels[x] = i + 1
        remaining = [x for x in remaining if x not in chosen]
        rows = rows[(a.images[rows][:, chosen] == np.array(chosen)).all(axis=1)]
        i += 1
    return Labeling(tuple(labels))


def dfs_variant_label(a: GroupAction, orbit_order: Sequence[int] | None = None) -> tuple[Labeling, list[int]]:
    """Depth-first relative of :func:`greedy_stabilizer_label`.

    Orbits of the whole group are finished one at a time, in ``orbit_order``
    (indices into :func:`orbits`; default largest first). Inside an orbit each
    step picks the largest nontrivial suborbit of the current stabilizer,
    labels its least point with a fresh label and stabilizes it. Labels restart
    at 2 for each orbit, which is safe since orbits are never mixed.

    Returns the labeling and the orbit sizes seen at each stabilization step.
    """
    blocks = orbits(a).blocks()
    if orbit_order is None:
        orbit_order = sorted(range(len(blocks)), key=lambda j: (-len(blocks[j]), j))
    if sorted(orbit_order) != list(range(len(blocks))):
        raise ActionError("orbit_order must list every orbit index once")
    labels = [1] * a.ground_size
    trace: list[int] = []
    rows = np.arange(a.order)
    for j in orbit_order:
        free = list(blocks[j])
        label = 1
        while True:
            imgs = a.images[rows]
            best: list[int] = []
            for x in free:
                orb = sorted(set(np.unique(imgs[:, x]).tolist()))
                if len(orb) > len(best):
                    best = orb
            if len(best) <= 1:
                break
            x = best[0]
            label += 1
            labels[x] = label
            trace.append(len(best))
            free.remove(x)
            rows = rows[a.images[rows][:, x] == x]
    return Labeling(tuple(labels)), trace


def sn_action_n_minus_1(n: int) -> GroupAction:
    """S_n on ``n + 2`` points: naturally on the first ``n``; odd permutations swap the last two."""
    if n < 3:
        raise ValueError("construction needs n >= 3")
    t = Permutation.from_cycles(n, [(1, 2)])
    c = Permutation.from_cycles(n, [range(1, n + 1)])
    t_img = Permutation.from_cycles(n + 2, [(1, 2), (n + 1, n + 2)])
    c_cycles: list = [range(1, n + 1)]
    if c.sign() < 0:
        c_cycles.append((n + 1, n + 2))
    c_img = Permutation.from_cycles(n + 2, c_cycles)
    return GroupAction.from_generators([t, c], [t_img, c_img])


def coset_action(g: PermGroup, h: PermGroup) -> GroupAction:
    """Action of ``g`` on the left cosets of ``h`` (faithful iff the core of ``h`` is trivial)."""
    if not h.is_subgroup_of(g):
        raise ActionError("h is not a subgroup of g")
    cosets: dict[frozenset, int] = {}
    h_elems = [np.asarray(x, dtype=np.int64) for x in h.elements]
    elems = [np.asarray(x, dtype=np.int64) for x in g.elements]

    def coset(x: np.ndarray) -> frozenset:
        return frozenset(x[y].tobytes() for y in h_elems)

    reps = []
    for x in elems:
        c = coset(x)
        if c not in cosets:
            cosets[c] = len(cosets)
            reps.append(x)
    gens = list(g.generators)
    imgs = []
    for s in gens:
        sa = np.asarray(s.image, dtype=np.int64)
        imgs.append(Permutation([cosets[coset(sa[r])] for r in reps]))
    return GroupAction.from_generators(gens, imgs, degree=g.n, ground_size=len(reps))


def abelian_subgroup_labeling(a: GroupAction, h: PermGroup) -> Labeling:
    """Two-coloring meant to have stabilizer exactly ``h`` (abelian acting groups only).

    For the least point of each orbit, its ``h``-orbit gets color 1; all other
    points get color 2.

    The stabilizer is exactly ``h`` when the action is transitive. With several
    orbits it can be larger, and then no labeling at all has stabilizer ``h``:
    for ``<(1 2), (3 4)>`` and ``h = <(1 2)(3 4)>`` any labeling kept by
    ``(1 2)(3 4)`` is constant on both orbits, so ``(1 2)`` keeps it too. Use
    :func:`labeling_closure` to tell the two cases apart.
    """
    if not a.group.is_abelian():
        raise ActionError("acting group is not abelian")
    if not h.is_subgroup_of(a.group):
        raise ActionError("h is not a subgroup of the acting group")
    h_imgs = a.images[a.rows_of(h)]
    labels = [2] * a.ground_size
    for blk in orbits(a).blocks():
        for y in np.unique(h_imgs[:, blk[0]]):
            labels[int(y)] = 1
    return Labeling(tuple(labels))


def labeling_closure(a: GroupAction, h: PermGroup) -> PermGroup:
    """Smallest subgroup containing ``h`` that is the stabilizer of some labeling.

    Color each ``h``-orbit separately. Every ``h``-invariant labeling is
    constant on those orbits, so its stabilizer contains this one.
    """
    if not h.is_subgroup_of(a.group):
        raise ActionError("h is not a subgroup of the acting group")
    h_imgs = a.images[a.rows_of(h)]
    return label_stabilizer(a, Labeling(tuple(int(v) + 1 for v in h_imgs.min(axis=0))))


def is_lambda_fixing_set(a: GroupAction, w: Iterable[int], lam: IntegerPartition) -> bool:
    """Whether some labeling of ``w`` of type ``lam`` is preserved only by the identity.

    An element preserves a labeling of ``w`` when it maps ``w`` onto itself and
    keeps every color on ``w``. (A weaker reading, letting points of ``w``
    leave ``w``, is not what is computed here.)
    """
    w = sorted(set(w))
    lam = IntegerPartition(lam)
    if lam.n != len(w):
        raise ValueError("|w| must equal the size of lam")
    sub = a.images[:, w].astype(np.intp)
    inside = np.isin(sub, w).all(axis=1)
    cand = sub[inside]
    pos = np.full(a.ground_size, -1, dtype=np.intp)
    pos[w] = np.arange(len(w))
    local = pos[cand]  # each setwise stabilizer element as a permutation of w
    for sp in set_partitions_of_type(len(w), lam):
        codes = np.array(sp.block_of)
        if len(np.flatnonzero((codes[local] == codes).all(axis=1))) == 1:
            return True
    return False


def natural_action(group: PermGroup) -> GroupAction:
    return GroupAction.natural(group)


def symmetric_action(n: int) -> GroupAction:
    return GroupAction.natural(symmetric_group(n))


def factorial_bound(order: int) -> int:
    """Least ``k`` with ``order <= k!``."""
    k = 1
    while math.factorial(k) < order:
        k += 1
    return k
