"""Reference designs and two-graph utilities.

The 165 blocks of the 3-(12, 4, 3) design associated with the Mathieu
group M11 are compiled in, 1-based as published, and shifted to 0-based
on load.  A SHA-256 of the canonical serialization guards the data.
"""

from __future__ import annotations

import hashlib
from math import comb

import numpy as np

from . import subsets
from .hypergraph import Hypergraph, SimpleGraph, SpanReport, verify_span

# Published block list, in published order, vertices 1..12.
M11_BLOCKS = (
    (1, 2, 3, 7), (1, 5, 8, 9), (1, 4, 5, 6), (2, 5, 7, 11), (4, 5, 7, 10),
    (1, 3, 8, 10), (3, 8, 9, 11), (1, 2, 8, 9), (2, 5, 6, 7), (3, 4, 6, 11),
    (1, 7, 9, 11), (2, 4, 5, 12), (3, 4, 7, 9), (2, 3, 6, 10), (2, 4, 7, 10),
    (3, 5, 8, 10), (5, 8, 10, 11), (1, 6, 8, 10), (4, 8, 10, 11), (6, 8, 9, 12),
    (4, 5, 9, 10), (7, 8, 9, 11), (1, 6, 7, 9), (2, 3, 4, 6), (2, 3, 4, 7),
    (2, 3, 4, 5), (2, 6, 8, 11), (3, 6, 7, 12), (1, 4, 5, 11), (1, 4, 10, 11),
    (1, 2, 9, 11), (1, 4, 9, 12), (2, 7, 9, 12), (1, 2, 4, 8), (2, 5, 6, 9),
    (4, 6, 7, 9), (3, 6, 8, 9), (3, 5, 6, 10), (1, 2, 3, 9), (2, 6, 7, 10),
    (3, 7, 8, 10), (3, 5, 8, 9), (2, 6, 8, 10), (3, 7, 10, 11), (2, 8, 10, 12),
    (2, 3, 10, 11), (7, 8, 10, 12), (4, 6, 10, 12), (4, 8, 9, 12), (3, 7, 9, 10),
    (3, 6, 9, 10), (2, 7, 9, 10), (1, 2, 4, 10), (2, 4, 9, 11), (1, 3, 4, 9),
    (2, 6, 8, 9), (4, 5, 6, 7), (3, 5, 6, 7), (2, 7, 8, 9), (6, 9, 10, 11),
    (1, 4, 7, 8), (3, 5, 8, 12), (1, 6, 8, 12), (1, 3, 7, 11), (1, 3, 6, 11),
    (1, 2, 7, 12), (2, 3, 5, 11), (1, 6, 10, 11), (1, 7, 10, 12), (4, 5, 9, 11),
    (1, 5, 9, 12), (6, 9, 11, 12), (2, 5, 9, 10), (1, 6, 7, 8), (6, 7, 8, 11),
    (1, 5, 7, 8), (2, 3, 5, 9), (1, 2, 4, 6), (2, 4, 6, 9), (4, 6, 8, 10),
    (2, 5, 8, 10), (4, 5, 8, 9), (3, 6, 7, 8), (3, 4, 5, 10), (1, 5, 6, 10),
    (5, 7, 9, 11), (1, 5, 6, 9), (1, 3, 6, 9), (4, 7, 8, 10), (1, 3, 8, 11),
    (1, 2, 5, 10), (3, 9, 10, 12), (5, 6, 9, 11), (1, 5, 7, 10), (5, 6, 10, 12),
    (1, 3, 10, 12), (2, 3, 6, 12), (2, 4, 10, 12), (1, 3, 4, 8), (4, 6, 9, 10),
    (3, 4, 6, 8), (6, 7, 10, 11), (5, 7, 9, 12), (2, 4, 5, 8), (4, 7, 8, 9),
    (1, 2, 6, 7), (1, 4, 9, 10), (2, 9, 10, 11), (1, 2, 8, 12), (4, 8, 11, 12),
    (1, 5, 8, 11), (1, 2, 5, 11), (1, 4, 6, 12), (5, 6, 8, 11), (1, 3, 6, 12),
    (2, 7, 11, 12), (3, 5, 6, 11), (1, 3, 5, 7), (2, 5, 6, 12), (1, 3, 5, 12),
    (2, 10, 11, 12), (2, 4, 7, 11), (4, 5, 7, 12), (3, 9, 11, 12), (4, 6, 11, 12),
    (2, 4, 8, 11), (3, 4, 8, 12), (2, 3, 8, 11), (3, 5, 7, 9), (4, 6, 7, 11),
    (2, 3, 7, 8), (3, 4, 10, 11), (1, 2, 3, 10), (1, 4, 7, 11), (2, 4, 9, 12),
    (3, 4, 9, 11), (4, 5, 6, 8), (5, 9, 10, 12), (2, 3, 9, 12), (3, 4, 10, 12),
    (5, 10, 11, 12), (6, 7, 9, 12), (6, 7, 10, 12), (5, 7, 10, 11), (2, 5, 7, 8),
    (1, 4, 7, 12), (1, 3, 4, 5), (1, 7, 9, 10), (7, 8, 11, 12), (1, 2, 5, 12),
    (2, 3, 8, 12), (5, 6, 8, 12), (4, 5, 11, 12), (1, 9, 11, 12), (3, 4, 7, 12),
    (5, 7, 8, 12), (3, 5, 11, 12), (1, 2, 6, 11), (2, 6, 11, 12), (3, 7, 11, 12),
    (8, 9, 10, 11), (1, 8, 9, 10), (1, 10, 11, 12), (8, 9, 10, 12), (1, 8, 11, 12),
)

# sha256 of hypergraph_to_text(load_m11())
M11_SHA256 = "fcdaf95a12e58932091eba0fe26741a36cb201d6c91f15f3dbb05350630078d1"

# The twelve blocks avoiding vertices 1..5, as listed separately in the source (1-based).
NON_TOURNAMENT_BLOCKS = (
    (6, 7, 8, 11), (6, 7, 9, 12), (6, 7, 10, 11), (6, 7, 10, 12),
    (6, 8, 9, 12), (6, 9, 10, 11), (6, 9, 11, 12), (7, 8, 9, 11),
    (7, 8, 10, 12), (7, 8, 11, 12), (8, 9, 10, 11), (8, 9, 10, 12),
)

# Frankl-Furedi two-graph: the 5-cycle 0-1-2-3-4 plus the isolated vertex 5.
TWO_GRAPH_EXAMPLE_GRAPH = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))
TWO_GRAPH_EXAMPLE_TRIPLES = (
    (0, 1, 5), (0, 1, 3), (1, 2, 5), (1, 2, 4), (2, 3, 5),
    (0, 2, 3), (3, 4, 5), (1, 3, 4), (0, 4, 5), (0, 1, 2),
)


class ChecksumMismatch(RuntimeError):
    pass


def load_m11() -> Hypergraph:
    """The M11 design on vertices 0..11."""
    h = Hypergraph.from_edges(12, 4, ([v - 1 for v in b] for b in M11_BLOCKS))
    if h.num_edges != len(M11_BLOCKS) or h.digest() != M11_SHA256:
        raise ChecksumMismatch("embedded M11 block list is corrupt")
    return h


def non_tournament_example() -> Hypergraph:
    """The twelve M11 blocks inside {6..12}, re-indexed to vertices 0..6."""
    return Hypergraph.from_edges(7, 4, ([v - 6 for v in b] for b in NON_TOURNAMENT_BLOCKS))


def two_graph_example_graph() -> SimpleGraph:
    return SimpleGraph.from_edges(6, TWO_GRAPH_EXAMPLE_GRAPH)


def two_graph_from_graph(g: SimpleGraph) -> Hypergraph:
    """Triples spanning an odd number of edges of g."""
    rows = subsets.combos(g.n, 3)
    counts = g.adjacency[subsets.sub_ranks(rows, 2, g.n)].sum(axis=1) if len(rows) else np.zeros(0)
    return Hypergraph(g.n, 3, counts % 2 == 1)


def verify_two_graph(h: Hypergraph) -> SpanReport:
    """Every 4-set must contain an even number of triples."""
    if h.k != 3:
        raise ValueError("two-graphs are 3-uniform")
    return verify_span(h, "even")


def random_graph(n: int, seed: int, p: float = 0.5) -> SimpleGraph:
    rng = np.random.default_rng(seed)
    adj = rng.random(comb(n, 2)) < p
    adj.setflags(write=False)
    return SimpleGraph(n, adj)
