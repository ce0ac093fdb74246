"""Distinguishing polynomial and distinguishing symmetric function (exact integers only).

Both are computed from the set partitions of the ground set that distinguish
the action. A set partition with ``i`` blocks yields ``i!`` distinguishing
labelings using exactly ``i`` given colors; one of type ``lam`` yields
``prod(m_j!)`` labelings with color ``c`` used ``lam_c`` times, where ``m_j``
counts parts of size ``j``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .action import GroupAction, distinguishing_mask
from .graphs import enumerate_graphs, graph_action, write_graph6
from .partitions import IntegerPartition, dominates, partitions_of, rgs_matrix, rgs_weights

MAX_GROUND = 8


def _distinguishing_types(a: GroupAction) -> Counter:
    if a.ground_size > MAX_GROUND:
        raise ValueError(f"ground set larger than {MAX_GROUND}")
    rgs = rgs_matrix(a.ground_size)
    weights = rgs_weights(rgs)
    ok = distinguishing_mask(a.images, rgs)
    return Counter(weights[i] for i in np.flatnonzero(ok))


@dataclass(frozen=True)
class DistPolynomial:
    """``f(x) = sum_i a[i] * binomial(x, i)``; ``a[i]`` counts distinguishing labelings using exactly ``i`` colors."""

    n: int
    a: tuple[int, ...]  # a[0] is the coefficient of binomial(x, 1)

    def coefficient(self, i: int) -> int:
        return self.a[i - 1] if 1 <= i <= self.n else 0

    def __call__(self, r: int) -> int:
        return sum(c * math.comb(r, i) for i, c in enumerate(self.a, start=1))

    def distinguishing_number(self) -> int:
        return next(i for i, c in enumerate(self.a, start=1) if c > 0)

    def power_coefficients(self) -> list[Fraction]:
        """Coefficients of ``1, x, x^2, ..., x^n``."""
        out = [Fraction(0)] * (self.n + 1)
        for i, c in enumerate(self.a, start=1):
            # binomial(x, i) = x (x-1) ... (x-i+1) / i!
            poly = [Fraction(1)]
            for j in range(i):
                poly = [Fraction(0)] + poly
                for d in range(len(poly) - 1):
                    poly[d] -= j * poly[d + 1]
            for d, v in enumerate(poly):
                out[d] += c * v / math.factorial(i)
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "binomial_coefficients": list(self.a),
                "power_coefficients": [str(c) for c in self.power_coefficients()]}


def distinguishing_counts(a: GroupAction) -> DistPolynomial:
    by_blocks = Counter()
    for lam, c in _distinguishing_types(a).items():
        by_blocks[len(lam)] += c
    n = a.ground_size
    return DistPolynomial(n, tuple(math.factorial(i) * by_blocks[i] for i in range(1, n + 1)))


@dataclass
class SymFunc:
    """Homogeneous symmetric function of degree ``n`` in the monomial or Schur basis."""

    n: int
    basis: str
    coeffs: dict[IntegerPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("monomial", "schur"):
            raise ValueError("basis is 'monomial' or 'schur'")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = IntegerPartition(lam)
            if lam.n != self.n:
                raise ValueError(f"{lam} has the wrong size for degree {self.n}")
            if c:
                clean[lam] = int(c)
        self.coeffs = clean

    def coefficient(self, lam) -> int:
        return self.coeffs.get(IntegerPartition(lam), 0)

    def _same(self, other: SymFunc) -> None:
        if self.n != other.n or self.basis != other.basis:
            raise ValueError("degree or basis mismatch")

    def __add__(self, other: SymFunc) -> SymFunc:
        self._same(other)
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return SymFunc(self.n, self.basis, dict(out))

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + other * -1

    def __mul__(self, k: int) -> SymFunc:
        return SymFunc(self.n, self.basis, {lam: k * c for lam, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and (self.n, self.basis, self.coeffs) == (other.n, other.basis, other.coeffs)

    def negative_terms(self) -> dict[IntegerPartition, int]:
        return {lam: c for lam, c in self.coeffs.items() if c < 0}

    def to_dict(self) -> dict[str, int]:
        order = {p: i for i, p in enumerate(partitions_of(self.n))}
        return {",".join(map(str, lam)): c for lam, c in sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])}

    def __repr__(self) -> str:
        sym = "m" if self.basis == "monomial" else "s"
        if not self.coeffs:
            return "0"
        order = {p: i for i, p in enumerate(partitions_of(self.n))}
        terms = sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])
        return " + ".join(f"{c}*{sym}{lam!r}" for lam, c in terms).replace("+ -", "- ")


def dsf_monomial(a: GroupAction) -> SymFunc:
    """Monomial expansion of the sum of ``x_{c(1)} ... x_{c(n)}`` over distinguishing colorings ``c``."""
    coeffs = {}
    for lam, count in _distinguishing_types(a).items():
        coeffs[lam] = count * math.prod(math.factorial(m) for m in lam.multiplicities().values())
    return SymFunc(a.ground_size, "monomial", coeffs)


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``, by filling cells row by row."""
    lam, mu = IntegerPartition(lam), IntegerPartition(mu)
    if lam.n != mu.n:
        raise ValueError("shape and content sizes differ")
    return _kostka(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    grid: dict[tuple[int, int], int] = {}
    left = list(mu)
    count = 0

    def fill(i: int) -> None:
        nonlocal count
        if i == len(cells):
            count += 1
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])  # rows weakly increase
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)  # columns strictly increase
        for v in range(lo, len(mu) + 1):
            if left[v - 1]:
                left[v - 1] -= 1
                grid[(r, c)] = v
                fill(i + 1)
                left[v - 1] += 1
        grid.pop((r, c), None)

    fill(0)
    return count


def kostka_matrix(n: int) -> tuple[list[IntegerPartition], np.ndarray]:
    parts = partitions_of(n)
    return parts, np.array([[kostka(a, b) for b in parts] for a in parts], dtype=object)


def monomial_to_schur(f: SymFunc) -> SymFunc:
    """Solve ``f = sum c_lam s_lam`` using ``s_lam = sum_mu K[lam, mu] m_mu``.

    Partitions are processed in reverse-lexicographic order, which extends
    dominance; ``K`` is unitriangular for dominance, so each ``c_lam`` is
    determined by the ones already found.
    """
    if f.basis != "monomial":
        raise ValueError("input must be in the monomial basis")
    parts = partitions_of(f.n)
    c: dict[IntegerPartition, int] = {}
    for lam in parts:
        c[lam] = f.coefficient(lam) - sum(cv * kostka(nu, lam) for nu, cv in c.items() if cv)
    return SymFunc(f.n, "schur", c)


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis != "schur":
        raise ValueError("input must be in the Schur basis")
    out = Counter()
    for lam, c in f.coeffs.items():
        for mu in partitions_of(f.n):
            if dominates(lam, mu):
                out[mu] += c * kostka(lam, mu)
    return SymFunc(f.n, "monomial", dict(out))


def is_schur_positive(f: SymFunc) -> bool:
    if f.basis != "schur":
        f = monomial_to_schur(f)
    return all(c >= 0 for c in f.coeffs.values())


def monomial_count(lam: IntegerPartition, r: int) -> int:
    """Number of monomials in ``m_lam`` in ``r`` variables (``m_lam`` evaluated at ``r`` ones)."""
    if len(lam) > r:
        return 0
    counts = Counter(lam)
    counts[0] = r - len(lam)
    return math.factorial(r) // math.prod(math.factorial(v) for v in counts.values())


def specialize(f: SymFunc, r: int) -> int:
    """Value at ``x_1 = ... = x_r = 1``, other variables 0."""
    if f.basis != "monomial":
        f = schur_to_monomial(f)
    return sum(c * monomial_count(lam, r) for lam, c in f.coeffs.items())


@dataclass
class ScanResult:
    graph6: str
    n: int
    dsf_schur: SymFunc

    def negative_terms(self) -> dict[IntegerPartition, int]:
        return self.dsf_schur.negative_terms()

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "dsf_schur": self.dsf_schur.to_dict(),
            "negative_terms": {",".join(map(str, k)): v for k, v in self.negative_terms().items()},
        }


def graph_dsf_schur(graph6: str) -> SymFunc:
    from .graphs import parse_graph6

    return monomial_to_schur(dsf_monomial(graph_action(parse_graph6(graph6))))


@dataclass
class ScanReport:
    n_max: int
    graphs_per_n: dict[int, int]
    exceptions: list[ScanResult]

    def to_json(self) -> str:
        return json.dumps([e.to_dict() for e in self.exceptions], indent=1) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "graphs", "non_schur_positive"])
        for n, total in sorted(self.graphs_per_n.items()):
            w.writerow([n, total, sum(1 for e in self.exceptions if e.n == n)])
        return buf.getvalue()


def scan_graphs_schur(n_max: int, jobs: int = 1) -> ScanReport:
    """DSF Schur-positivity over all isomorphism classes on ``1..n_max`` vertices.

    Results are keyed by canonical graph6 and sorted by ``(n, graph6)``, so
    the report does not depend on ``jobs``.
    """
    if not 1 <= n_max <= 7:
        raise ValueError("scan supports 1 <= n_max <= 7")
    work = [(n, write_graph6(g)) for n in range(1, n_max + 1) for g in enumerate_graphs(n)]
    codes = [g6 for _, g6 in work]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            schur = list(pool.map(graph_dsf_schur, codes, chunksize=16))
    else:
        schur = [graph_dsf_schur(c) for c in codes]
    exceptions = [ScanResult(g6, n, s) for (n, g6), s in zip(work, schur) if s.negative_terms()]
    exceptions.sort(key=lambda e: (e.n, e.graph6))
    return ScanReport(n_max, dict(Counter(n for n, _ in work)), exceptions)
