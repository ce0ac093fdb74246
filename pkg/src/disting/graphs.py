"""Small graphs: graph6 and edge-list I/O, automorphisms, canonical forms, enumeration.

Graphs are adjacency matrices. Simple graphs are symmetric 0/1 with zero
diagonal; multigraphs hold symmetric edge multiplicities; digraphs hold
arbitrary nonnegative arc multiplicities. Only simple graphs have graph6
encodings and canonical forms.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

import numpy as np

from .action import GroupAction, find_distinguishing_labeling, Labeling
from .perm import PermGroup

MAX_VERTICES = 10
MAX_CANONICAL = 8
KINDS = ("simple", "multi", "di")


class GraphFormatError(ValueError):
    pass


class Graph:
    __slots__ = ("adj", "kind")

    def __init__(self, adj, kind: str = "simple"):
        adj = np.array(adj, dtype=np.int64)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if adj.shape[0] > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported")
        if (adj < 0).any():
            raise ValueError("negative multiplicity")
        if kind != "di" and not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if kind == "simple" and ((adj > 1).any() or np.diag(adj).any()):
            raise ValueError("simple graphs are 0/1 with no loops")
        adj.setflags(write=False)
        self.adj = adj
        self.kind = kind

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], kind: str = "simple") -> Graph:
        """Edges are 0-indexed pairs; repeated edges add multiplicity for multi/di graphs."""
        adj = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            if kind == "simple":
                if u == v:
                    raise ValueError("loops are not allowed in simple graphs")
                adj[u, v] = adj[v, u] = 1
            elif kind == "multi":
                adj[u, v] += 1
                if u != v:
                    adj[v, u] += 1
            else:
                adj[u, v] += 1
        return cls(adj, kind)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def edges(self) -> list[tuple[int, int]]:
        if self.kind == "di":
            return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.adj))]
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(self.adj)))]

    def num_edges(self) -> int:
        if self.kind == "di":
            return int(self.adj.sum())
        return int(np.triu(self.adj).sum())

    def degrees(self) -> list[int]:
        return self.adj.sum(axis=1).tolist()

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def relabel(self, perm) -> Graph:
        """Vertex ``i`` becomes vertex ``perm[i]``."""
        p = np.asarray(perm)
        inv = np.argsort(p)
        return Graph(self.adj[np.ix_(inv, inv)], self.kind)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.kind == other.kind and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.kind, self.adj.tobytes()))

    def __repr__(self) -> str:
        if self.kind == "simple":
            return f"Graph({write_graph6(self)!r})"
        return f"Graph(n={self.n}, kind={self.kind!r}, edges={self.edges()})"


def complete_graph(n: int) -> Graph:
    return Graph(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))


def empty_graph(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=np.int64))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complement(g: Graph) -> Graph:
    if g.kind != "simple":
        raise ValueError("complement is defined for simple graphs")
    return Graph(1 - g.adj - np.eye(g.n, dtype=np.int64))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    s = sorted(set(s))
    if not s:
        raise ValueError("vertex subset must be nonempty")
    return Graph(g.adj[np.ix_(s, s)], g.kind)


# graph6 ---------------------------------------------------------------


def _pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 (column-major) order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def write_graph6(g: Graph) -> str:
    if g.kind != "simple":
        raise GraphFormatError("graph6 encodes simple graphs only")
    n = g.n
    if n > 62:
        raise GraphFormatError("only n <= 62 is supported")
    bits = [int(g.adj[i, j]) for i, j in _pair_order(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = 2 * v + b
        out.append(chr(63 + v))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphFormatError(f"character outside 63..126 in {text!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphFormatError("only n <= 62 is supported")
    pairs = _pair_order(n)
    nbytes = -(-len(pairs) // 6)
    body = s[1:]
    if len(body) != nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    bits = []
    for c in body:
        v = ord(c) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[len(pairs):]):
        raise GraphFormatError("nonzero padding bits")
    adj = np.zeros((n, n), dtype=np.int64)
    for (i, j), b in zip(pairs, bits):
        adj[i, j] = adj[j, i] = b
    return Graph(adj)


def read_edgelist(text: str, kind: str = "simple") -> Graph:
    """``n m`` header, then ``m`` lines ``u v`` with 1-indexed vertices; ``#`` starts a comment."""
    lines = [ln.split("#")[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or len(lines[0]) != 2:
        raise GraphFormatError("edge list must start with 'n m'")
    try:
        n, m = map(int, lines[0])
        edges = [(int(u) - 1, int(v) - 1) for u, v in lines[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    if any(not (0 <= u < n and 0 <= v < n) for u, v in edges):
        raise GraphFormatError("vertex out of range")
    return Graph.from_edges(n, edges, kind)


def write_edgelist(g: Graph) -> str:
    edges = []
    for u, v in g.edges():
        edges.extend([(u, v)] * int(g.adj[u, v]))
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u + 1} {v + 1}" for u, v in edges]) + "\n"


def load_graph(text: str) -> Graph:
    """graph6 when the text is a single token, edge list otherwise."""
    tokens = text.split()
    if len(tokens) == 1 or (tokens and tokens[0].startswith(">>graph6<<")):
        return parse_graph6(tokens[0])
    return read_edgelist(text)


def to_dot(g: Graph, labeling: Labeling | None = None, name: str = "G") -> str:
    directed = g.kind == "di"
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(g.n):
        lab = f"{v + 1}" if labeling is None else f"{v + 1}:{labeling.colors[v]}"
        lines.append(f'  {v + 1} [label="{lab}"];')
    for u, v in g.edges():
        for _ in range(int(g.adj[u, v])):
            lines.append(f"  {u + 1} {arrow} {v + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# automorphisms ----------------------------------------------------------


def automorphism_group(g: Graph) -> PermGroup:
    """All adjacency-preserving vertex permutations, by backtracking.

    Vertices are only tried against vertices with the same (out-degree,
    in-degree, loop) signature, and every partial map is checked against all
    previously mapped vertices in both directions.
    """
    n = g.n
    adj = g.adj.tolist()
    sig = [(sum(adj[i]), sum(adj[k][i] for k in range(n)), adj[i][i]) for i in range(n)]
    cands = [[j for j in range(n) if sig[j] == sig[i]] for i in range(n)]
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(i: int) -> None:
        if i == n:
            found.append(tuple(image))
            return
        row_i = adj[i]
        for j in cands[i]:
            if used[j]:
                continue
            row_j = adj[j]
            ok = True
            for k in range(i):
                pk = image[k]
                if row_i[k] != row_j[pk] or adj[k][i] != adj[pk][j]:
                    ok = False
                    break
            if ok:
                image[i] = j
                used[j] = True
                extend(i + 1)
                used[j] = False
        image[i] = -1

    extend(0)
    elems = np.array(sorted(found), dtype=np.int8).reshape(-1, n)
    return PermGroup.from_elements(n, elems)


def is_automorphism(g: Graph, perm) -> bool:
    p = np.asarray(perm)
    return bool(np.array_equal(g.adj[np.ix_(p, p)], g.adj))


# canonical forms -------------------------------------------------------


@lru_cache(maxsize=None)
def _relabel_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pairs = _pair_order(n)
    index = {p: k for k, p in enumerate(pairs)}
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    m = len(pairs)
    table = np.empty((len(perms), m), dtype=np.int64)
    for k, (a, b) in enumerate(pairs):
        x, y = perms[:, a], perms[:, b]
        lo, hi = np.minimum(x, y), np.maximum(x, y)
        table[:, k] = [index[(int(u), int(v))] for u, v in zip(lo, hi)]
    weights = (1 << np.arange(m - 1, -1, -1, dtype=np.int64)) if m else np.zeros(0, dtype=np.int64)
    return perms, table, weights


def _bits(g: Graph) -> np.ndarray:
    return np.array([g.adj[i, j] for i, j in _pair_order(g.n)], dtype=np.int64)


def canonical_code(g: Graph) -> int:
    """Minimal graph6 bit string (as an integer) over all vertex relabelings."""
    if g.kind != "simple":
        raise ValueError("canonical forms are for simple graphs")
    if g.n > MAX_CANONICAL:
        raise ValueError(f"exhaustive canonicalization limited to n <= {MAX_CANONICAL}")
    if g.n < 2:
        return 0
    _, table, weights = _relabel_tables(g.n)
    return int((_bits(g)[table] @ weights).min())


def _from_code(n: int, code: int) -> Graph:
    adj = np.zeros((n, n), dtype=np.int64)
    pairs = _pair_order(n)
    m = len(pairs)
    for k, (i, j) in enumerate(pairs):
        if (code >> (m - 1 - k)) & 1:
            adj[i, j] = adj[j, i] = 1
    return Graph(adj)


def canonical_form(g: Graph) -> Graph:
    """The relabeling of ``g`` with lexicographically least graph6 bit string."""
    return _from_code(g.n, canonical_code(g))


def canonical_graph6(g: Graph) -> str:
    return write_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_code(g) == canonical_code(h)


@lru_cache(maxsize=None)
def _enumerate_codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    codes = set()
    for code in _enumerate_codes(n - 1):
        base = _from_code(n - 1, code).adj
        for mask in range(1 << (n - 1)):
            adj = np.zeros((n, n), dtype=np.int64)
            adj[: n - 1, : n - 1] = base
            nbrs = [i for i in range(n - 1) if mask >> i & 1]
            adj[nbrs, n - 1] = adj[n - 1, nbrs] = 1
            codes.add(canonical_code(Graph(adj)))
    return tuple(sorted(codes))


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices, sorted by canonical code.

    Built by adding a vertex with every possible neighborhood to each class on
    ``n - 1`` vertices; every graph arises this way from its vertex-deleted
    subgraph, and canonical forms remove duplicates.
    """
    if not 0 <= n <= 7:
        raise ValueError("enumeration supports 0 <= n <= 7")
    if n == 0:
        return [Graph(np.zeros((0, 0), dtype=np.int64))]
    return [_from_code(n, c) for c in _enumerate_codes(n)]


# distinguishing numbers ---------------------------------------------------


def graph_action(g: Graph) -> GroupAction:
    return GroupAction.natural(automorphism_group(g))


def graph_distinguishing_labeling(g: Graph) -> Labeling:
    return find_distinguishing_labeling(graph_action(g))


def graph_distinguishing_number(g: Graph) -> int:
    return graph_distinguishing_labeling(g).max_label()


def is_distinguishing_critical(g: Graph, _memo: dict | None = None) -> bool:
    """True iff every induced subgraph on a nonempty proper vertex subset has a different D."""
    if g.n > 7:
        raise ValueError("criticality check limited to n <= 7")
    memo = {} if _memo is None else _memo

    def d(h: Graph) -> int:
        key = (h.n, canonical_code(h)) if h.kind == "simple" else None
        if key is None:
            return graph_distinguishing_number(h)
        if key not in memo:
            memo[key] = graph_distinguishing_number(h)
        return memo[key]

    target = d(g)
    for size in range(1, g.n):
        for s in itertools.combinations(range(g.n), size):
            if d(induced_subgraph(g, s)) == target:
                return False
    return True
