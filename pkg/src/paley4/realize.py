"""Decide whether a 4-graph is the Baber hypergraph of some tournament.

Every tournament is switching equivalent to one in which vertex 0 is a
sink, and switching preserves the Baber hypergraph, so the search only
ranges over sink-normalized tournaments.  The unknowns are the
orientation bits of pairs avoiding vertex 0.

For a 4-set {a < b < c < d} let P1, P2, P3 be the products of f around
the cycles a-b-c-d, a-b-d-c, a-c-b-d.  P1 P2 P3 = -1 always, so the set
is an edge iff P1 = P2 = -1.  Each "P = -1" is a parity constraint on
the orientation bits.  Hyperedges contribute two required parities;
non-edges contribute the clause "not both".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from . import subsets
from .errors import BudgetExceeded
from .hypergraph import Hypergraph
from .tournament import Tournament, baber_hypergraph, cycle_products

DEFAULT_BUDGET = 1_000_000

# Cycles through the sorted 4-set (a, b, c, d) = positions 0..3.
_CYCLES = (
    ((0, 1), (1, 2), (2, 3), (3, 0)),
    ((0, 1), (1, 3), (3, 2), (2, 0)),
)


@dataclass(frozen=True)
class RealizabilityOutcome:
    witness: Tournament | None
    nodes: int

    @property
    def realizable(self) -> bool:
        return self.witness is not None

    @property
    def status(self) -> str:
        return "Witness" if self.witness is not None else "Unrealizable"


@dataclass
class _Parity:
    # XOR of the "reversed" bits of ``variables`` must equal ``rhs``
    variables: tuple[int, ...]
    rhs: int


def _parity_for(quad, cycle) -> _Parity:
    # f(u, v) = (-1)^(z + [u > v]) where z = 1 iff the pair {u, v} points from larger to smaller
    rhs = 1
    variables = []
    z_fixed = 0
    for i, j in cycle:
        u, v = quad[i], quad[j]
        if u > v:
            rhs ^= 1
        if min(u, v) == 0:
            z_fixed ^= 1  # sink normalization: max(u, v) -> 0
        else:
            variables.append(subsets.pair_rank(u, v))
    return _Parity(tuple(variables), rhs ^ z_fixed)


class _Search:
    def __init__(self, h: Hypergraph, budget: int):
        self.n = h.n
        self.budget = budget
        self.nodes = 0
        self.free = [subsets.pair_rank(u, v) for u, v in subsets.combos(h.n, 2).tolist() if u != 0]
        self.value = {r: None for r in self.free}
        self.required: list[_Parity] = []
        self.clauses: list[tuple[_Parity, _Parity]] = []
        self.occurs: dict[int, list[tuple[str, int]]] = {r: [] for r in self.free}
        for quad, is_edge in zip(subsets.combos(h.n, 4).tolist(), h.flags.tolist()):
            p1, p2 = (_parity_for(quad, c) for c in _CYCLES)
            if is_edge:
                for p in (p1, p2):
                    self._watch(("req", len(self.required)), p)
                    self.required.append(p)
            else:
                cid = ("nand", len(self.clauses))
                self.clauses.append((p1, p2))
                for var in set(p1.variables) | set(p2.variables):
                    self.occurs[var].append(cid)

    def _watch(self, cid, p):
        for var in p.variables:
            self.occurs[var].append(cid)

    def _state(self, p: _Parity):
        """(parity of assigned bits, list of unassigned variables)."""
        acc, open_vars = 0, []
        for var in p.variables:
            val = self.value[var]
            if val is None:
                open_vars.append(var)
            else:
                acc ^= val
        return acc, open_vars

    def _check(self, cid):
        """None on conflict, else a list of forced (var, value) assignments."""
        kind, i = cid
        if kind == "req":
            acc, open_vars = self._state(self.required[i])
            if not open_vars:
                return [] if acc == self.required[i].rhs else None
            if len(open_vars) == 1:
                return [(open_vars[0], acc ^ self.required[i].rhs)]
            return []
        p1, p2 = self.clauses[i]
        s1, s2 = self._state(p1), self._state(p2)
        sat1 = not s1[1] and s1[0] == p1.rhs
        sat2 = not s2[1] and s2[0] == p2.rhs
        if sat1 and sat2:
            return None
        for sat, (acc, open_vars), p in ((sat1, s2, p2), (sat2, s1, p1)):
            if sat and len(open_vars) == 1:
                return [(open_vars[0], acc ^ p.rhs ^ 1)]
        return []

    def _assign(self, var, val, trail) -> bool:
        queue = [(var, val)]
        while queue:
            var, val = queue.pop()
            cur = self.value[var]
            if cur is not None:
                if cur != val:
                    return False
                continue
            self.value[var] = val
            trail.append(var)
            for cid in self.occurs[var]:
                forced = self._check(cid)
                if forced is None:
                    return False
                queue.extend(forced)
        return True

    def _undo(self, trail, mark):
        while len(trail) > mark:
            self.value[trail.pop()] = None

    def _initial(self, trail) -> bool:
        for i in range(len(self.required)):
            forced = self._check(("req", i))
            if forced is None:
                return False
            for var, val in forced:
                if not self._assign(var, val, trail):
                    return False
        for i in range(len(self.clauses)):
            forced = self._check(("nand", i))
            if forced is None:
                return False
            for var, val in forced:
                if not self._assign(var, val, trail):
                    return False
        return True

    def _next_free(self):
        for var in self.free:
            if self.value[var] is None:
                return var
        return None

    def _dfs(self, trail) -> bool:
        var = self._next_free()
        if var is None:
            return True
        for val in (0, 1):  # 0: forward (smaller -> larger) first
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(self.nodes - 1)
            mark = len(trail)
            if self._assign(var, val, trail) and self._dfs(trail):
                return True
            self._undo(trail, mark)
        return False

    def run(self) -> Tournament | None:
        trail: list[int] = []
        if not self._initial(trail) or not self._dfs(trail):
            return None
        orient = np.zeros(comb(self.n, 2), dtype=bool)  # pairs with 0 point into 0
        for var in self.free:
            orient[var] = self.value[var] == 0
        return Tournament(self.n, orient)


def realize_as_tournament(h: Hypergraph, budget: int = DEFAULT_BUDGET) -> RealizabilityOutcome:
    """Search for a tournament T with baber_hypergraph(T) == h and vertex 0 a sink.

    Raises BudgetExceeded if more than ``budget`` branch nodes are needed.
    """
    if h.k != 4:
        raise ValueError("realizability is defined for 4-uniform hypergraphs")
    if h.n < 4:
        if h.num_edges:
            raise ValueError("no 4-sets on fewer than 4 vertices")
        return RealizabilityOutcome(Tournament(h.n, np.zeros(comb(h.n, 2), dtype=bool)), 0)
    search = _Search(h, budget)
    witness = search.run()
    if witness is not None and baber_hypergraph(witness) != h:
        raise AssertionError("search produced a witness that does not realize the input")
    return RealizabilityOutcome(witness, search.nodes)


def sink_normalized_signs(n: int, bits: np.ndarray) -> np.ndarray:
    """Sign matrices for a batch of bit rows over pairs avoiding 0 (True = forward)."""
    bits = np.asarray(bits, dtype=bool)
    rows = subsets.combos(n, 2)
    free = rows[rows[:, 0] != 0]
    F = np.zeros((len(bits), n, n), dtype=np.int8)
    F[:, 1:, 0] = 1
    F[:, 0, 1:] = -1
    s = np.where(bits, 1, -1).astype(np.int8)
    F[:, free[:, 0], free[:, 1]] = s
    F[:, free[:, 1], free[:, 0]] = -s
    return F


def exhaustive_realizations(h: Hypergraph, chunk: int = 1 << 12) -> int:
    """Count sink-normalized tournaments realizing h by trying all 2^C(n-1, 2) of them."""
    n = h.n
    m = comb(n - 1, 2)
    if m > 24:
        raise ValueError(f"2^{m} tournaments is too many to enumerate")
    quads = subsets.combos(n, 4)
    target = h.flags
    found = 0
    powers = 1 << np.arange(m, dtype=np.int64)
    for start in range(0, 1 << m, chunk):
        codes = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        bits = (codes[:, None] & powers) != 0
        p1, p2, p3 = cycle_products(sink_normalized_signs(n, bits), quads)
        edges = (p1 == -1) & (p2 == -1) & (p3 == -1)
        found += int((edges == target).all(axis=1).sum())
    return found


def odd_cycle_obstruction(h: Hypergraph):
    """First pair (u, v) whose link graph has an odd cycle, with the cycle in original labels.

    Returns None when every link graph is bipartite.
    """
    from .hypergraph import is_bipartite, link_graph

    for u, v in itertools.combinations(range(h.n), 2):
        g = link_graph(h, u, v)
        result = is_bipartite(g)
        if not result:
            return (u, v), tuple(g.labels[x] for x in result.odd_cycle)
    return None
