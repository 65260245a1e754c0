"""k-uniform hypergraphs stored as flags over colex-ranked k-subsets.

Also holds the Paley 4-graph builder and the exhaustive verifiers
(span counts, design parameters, independent sets, link graphs and
the intersection graph of hyperedges).
"""

from __future__ import annotations

import hashlib
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import subsets
from .errors import NotPaleyAdmissible
from .field import FieldSpec
from .projective import chi_det_matrix

SPAN_MODES = {
    "exactly-0-or-2": lambda c: c in (0, 2),
    "at-most-2": lambda c: c <= 2,
    "even": lambda c: c % 2 == 0,
}

# rows per vectorized block in the exhaustive scans
CHUNK = 1 << 16


class Hypergraph:
    """A k-uniform hypergraph on vertices 0..n-1.

    ``flags[r]`` is True iff the k-subset of colex rank r is a hyperedge.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "k", "flags")

    def __init__(self, n: int, k: int, flags: np.ndarray | None = None):
        size = comb(n, k)
        if flags is None:
            flags = np.zeros(size, dtype=bool)
        flags = np.asarray(flags, dtype=bool)
        if flags.shape != (size,):
            raise ValueError(f"flag vector must have length C({n},{k}) = {size}")
        flags = flags.copy()
        flags.setflags(write=False)
        self.n, self.k, self.flags = n, k, flags

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
        flags = np.zeros(comb(n, k), dtype=bool)
        for e in edges:
            flags[subsets.rank(subsets.normalize(e, n, k))] = True
        return cls(n, k, flags)

    @classmethod
    def complete(cls, n: int, k: int) -> Hypergraph:
        return cls(n, k, np.ones(comb(n, k), dtype=bool))

    @property
    def num_edges(self) -> int:
        return int(self.flags.sum())

    def __len__(self):
        return self.num_edges

    def edge_array(self) -> np.ndarray:
        """Hyperedges as rows of sorted vertices, in rank order."""
        return subsets.combos(self.n, self.k)[np.flatnonzero(self.flags)]

    def edges(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.edge_array()]

    def has_edge(self, subset: Sequence[int]) -> bool:
        s = subsets.normalize(subset, self.n, self.k)
        return bool(self.flags[subsets.rank(s)])

    __contains__ = has_edge

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and np.array_equal(self.flags, other.flags)

    def __hash__(self):
        return hash((self.n, self.k, self.flags.tobytes()))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, k={self.k}, edges={self.num_edges})"

    def with_flags(self, flags: np.ndarray) -> Hypergraph:
        return Hypergraph(self.n, self.k, flags)

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Image under the vertex map v -> perm[v]."""
        perm = np.asarray(perm)
        rows = np.sort(perm[self.edge_array()], axis=1)
        flags = np.zeros_like(self.flags)
        flags[subsets.rank_rows(rows, self.n)] = True
        return Hypergraph(self.n, self.k, flags)

    def induced(self, vertices: Sequence[int]) -> Hypergraph:
        """Sub-hypergraph on the given vertices, re-indexed in ascending order."""
        vertices = sorted(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        keep = [e for e in self.edges() if all(v in pos for v in e)]
        return Hypergraph.from_edges(len(vertices), self.k, ([pos[v] for v in e] for e in keep))

    def digest(self) -> str:
        from .io import hypergraph_to_text

        return hashlib.sha256(hypergraph_to_text(self).encode()).hexdigest()


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph; ``adjacency`` flags pairs by colex rank.

    ``labels[i]`` is the original name of vertex i when the graph was
    carved out of a larger vertex set (link graphs), else i.
    """

    n: int
    adjacency: np.ndarray
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]], labels: Sequence[int] = ()) -> SimpleGraph:
        adj = np.zeros(comb(n, 2), dtype=bool)
        for u, v in pairs:
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[subsets.pair_rank(u, v)] = True
        adj.setflags(write=False)
        return cls(n, adj, tuple(labels))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adjacency[subsets.pair_rank(u, v)])

    def edges(self) -> list[tuple[int, int]]:
        return [tuple(int(x) for x in row) for row in subsets.combos(self.n, 2)[self.adjacency]]

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum())

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges():
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbors()]

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))


@dataclass(frozen=True)
class SpanReport:
    ok: bool
    counts: dict[int, int]
    first_violation: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DesignReport:
    is_design: bool
    lam: int | None
    histogram: dict[int, int]


@dataclass(frozen=True)
class Bipartiteness:
    """Either a two-colouring (``parts``) or an odd cycle as a vertex list."""

    parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.odd_cycle is None


@dataclass(frozen=True)
class Fingerprint:
    n: int
    num_edges: int
    design_histogram: tuple[tuple[int, int], ...]
    independent_6_sets: int
    gamma_degrees: tuple[int, ...]


# -- construction -----------------------------------------------------------

def build_paley_hypergraph(spec: FieldSpec) -> Hypergraph:
    """The Paley 4-graph on the projective line over ``spec``.

    {a,b,c,d} is an edge iff S(a,b,c,d) = S(a,b,d,c) = S(a,c,b,d) = -1,
    which covers S under every permutation since S is invariant under
    cyclic shifts and reversal.
    """
    if not spec.paley_admissible:
        raise NotPaleyAdmissible(f"q = {spec.q} is not 3 mod 4")
    m = chi_det_matrix(spec).astype(np.int64)
    n = spec.q + 1
    rows = subsets.combos(n, 4)
    a, b, c, d = rows.T
    s1 = m[a, b] * m[b, c] * m[c, d] * m[d, a]
    s2 = m[a, b] * m[b, d] * m[d, c] * m[c, a]
    s3 = m[a, c] * m[c, b] * m[b, d] * m[d, a]
    return Hypergraph(n, 4, (s1 == -1) & (s2 == -1) & (s3 == -1))


# -- exhaustive scans ---------------------------------------------------------

def _chunks(n: int, m: int) -> Iterator[tuple[int, np.ndarray]]:
    rows = subsets.combos(n, m)
    for start in range(0, len(rows), CHUNK):
        yield start, rows[start:start + CHUNK]


def span_counts(h: Hypergraph, m: int) -> np.ndarray:
    """Number of hyperedges inside each m-subset, indexed by the m-subset's colex rank."""
    out = np.zeros(comb(h.n, m), dtype=np.int64)
    if m < h.k:
        return out
    for start, rows in _chunks(h.n, m):
        out[start:start + len(rows)] = h.flags[subsets.sub_ranks(rows, h.k, h.n)].sum(axis=1)
    return out


def verify_span(h: Hypergraph, mode: str = "exactly-0-or-2") -> SpanReport:
    """Count the hyperedges inside every (k+1)-subset and check them against ``mode``."""
    ok_count = SPAN_MODES[mode]
    counts = span_counts(h, h.k + 1)
    hist = Counter(counts.tolist())
    bad = [c for c in hist if not ok_count(c)]
    first = None
    if bad:
        r = int(np.flatnonzero(np.isin(counts, bad))[0])
        first = subsets.unrank(r, h.k + 1)
    return SpanReport(not bad, dict(sorted(hist.items())), first)


def coverage(h: Hypergraph, t: int) -> np.ndarray:
    """Number of hyperedges containing each t-subset, by colex rank."""
    if not 0 <= t < h.k:
        raise ValueError(f"strength t must satisfy 0 <= t < k = {h.k}")
    ranks = subsets.sub_ranks(h.edge_array(), t, h.n).ravel()
    return np.bincount(ranks, minlength=comb(h.n, t))


def design_parameters(h: Hypergraph, t: int = 3) -> DesignReport:
    hist = dict(sorted(Counter(coverage(h, t).tolist()).items()))
    if len(hist) == 1:
        return DesignReport(True, next(iter(hist)), hist)
    return DesignReport(False, None, hist)


def de_caen_bound(n: int, r: int) -> Fraction:
    """(n / r^2) * C(n, r - 1), exactly."""
    if not 2 <= r <= n:
        raise ValueError("need 2 <= r <= n")
    return Fraction(n, r * r) * comb(n, r - 1)


def independent_set_count(h: Hypergraph, m: int) -> int:
    if m < h.k:
        raise ValueError("independent-set size must be at least k")
    return int((span_counts(h, m) == 0).sum())


# -- graphs derived from a hypergraph --------------------------------------------

def link_graph(h: Hypergraph, u: int, v: int) -> SimpleGraph:
    """Pairs {x, y} with {u, v, x, y} a hyperedge, on V minus {u, v}.

    Vertices are re-indexed in ascending original order skipping u and v;
    ``labels`` holds the original indices.
    """
    if h.k != 4:
        raise ValueError("link graphs are defined for 4-uniform hypergraphs")
    if u == v:
        raise ValueError("u and v must differ")
    labels = [x for x in range(h.n) if x not in (u, v)]
    pos = {x: i for i, x in enumerate(labels)}
    pairs = []
    for e in h.edges():
        if u in e and v in e:
            x, y = (w for w in e if w not in (u, v))
            pairs.append((pos[x], pos[y]))
    return SimpleGraph.from_edges(len(labels), pairs, labels)


def is_bipartite(g: SimpleGraph) -> Bipartiteness:
    """Breadth-first two-colouring; on failure, an odd cycle through the offending edge."""
    adj = g.neighbors()
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return Bipartiteness(odd_cycle=_tree_cycle(x, y, parent, depth))
    parts = (
        tuple(i for i in range(g.n) if color[i] == 0),
        tuple(i for i in range(g.n) if color[i] == 1),
    )
    return Bipartiteness(parts=parts)


def _tree_cycle(x, y, parent, depth):
    # x, y adjacent with equal depth parity; join their tree paths at the common ancestor
    left, right = [x], [y]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


def girth(g: SimpleGraph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    adj = g.neighbors()
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def gamma_graph(h: Hypergraph) -> SimpleGraph:
    """Graph on the hyperedges (in rank order); adjacent iff they share k-1 vertices."""
    rows = h.edge_array()
    groups: dict[int, list[int]] = {}
    for i, ranks in enumerate(subsets.sub_ranks(rows, h.k - 1, h.n)):
        for r in ranks.tolist():
            groups.setdefault(r, []).append(i)
    pairs = [(a, b) for members in groups.values() for j, a in enumerate(members) for b in members[j + 1:]]
    return SimpleGraph.from_edges(len(rows), pairs)


def gamma_degrees(h: Hypergraph) -> np.ndarray:
    """Degrees in the gamma graph without materialising it."""
    cov = coverage(h, h.k - 1)
    return (cov[subsets.sub_ranks(h.edge_array(), h.k - 1, h.n)] - 1).sum(axis=1)


def max_triangles_per_edge(g: SimpleGraph) -> int:
    """Largest number of triangles sharing one edge; at most 1 iff any two triangles meet in <= 1 vertex."""
    nbrs = [set(a) for a in g.neighbors()]
    return max((len(nbrs[u] & nbrs[v]) for u, v in g.edges()), default=0)


def fingerprint(h: Hypergraph) -> Fingerprint:
    """Isomorphism invariants; equal fingerprints are necessary, not sufficient."""
    if h.k != 4:
        raise ValueError("fingerprint is defined for 4-uniform hypergraphs")
    hist = design_parameters(h, 3).histogram
    return Fingerprint(
        n=h.n,
        num_edges=h.num_edges,
        design_histogram=tuple(hist.items()),
        independent_6_sets=independent_set_count(h, 6) if h.n >= 6 else 0,
        gamma_degrees=tuple(sorted(gamma_degrees(h).tolist())),
    )
