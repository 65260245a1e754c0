"""Tournaments, Baber's 4-graph construction, switching and oriented two-graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, sqrt
from typing import Iterable, Sequence

import numpy as np

from . import subsets
from .errors import NotPaleyAdmissible, SizeMismatch
from .field import FieldSpec, chi
from .hypergraph import Hypergraph
from .projective import chi_det_matrix


class Tournament:
    """Orientation of the complete graph on 0..n-1.

    ``orient[pair_rank(u, v)]`` for u < v is True iff the edge is u -> v.
    """

    __slots__ = ("n", "orient")

    def __init__(self, n: int, orient: np.ndarray | None = None):
        size = comb(n, 2)
        if orient is None:
            orient = np.zeros(size, dtype=bool)
        orient = np.asarray(orient, dtype=bool)
        if orient.shape != (size,):
            raise ValueError(f"orientation vector must have length C({n},2) = {size}")
        orient = orient.copy()
        orient.setflags(write=False)
        self.n, self.orient = n, orient

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
        """Build from (u, v) meaning u -> v; every pair must appear exactly once."""
        orient = np.zeros(comb(n, 2), dtype=bool)
        seen = set()
        for u, v in arcs:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad arc {u} -> {v}")
            r = subsets.pair_rank(u, v)
            if r in seen:
                raise ValueError(f"pair {{{u}, {v}}} oriented twice")
            seen.add(r)
            orient[r] = u < v
        if len(seen) != comb(n, 2):
            raise ValueError("some pairs are not oriented")
        return cls(n, orient)

    @classmethod
    def from_signs(cls, signs: np.ndarray) -> Tournament:
        """From an antisymmetric matrix with F[x, y] = +1 iff x -> y."""
        signs = np.asarray(signs)
        n = signs.shape[0]
        rows = subsets.combos(n, 2)
        return cls(n, signs[rows[:, 0], rows[:, 1]] == 1)

    def f(self, x: int, y: int) -> int:
        """+1 if x -> y, -1 if y -> x."""
        if x == y:
            raise ValueError("f is defined on distinct vertices")
        fwd = bool(self.orient[subsets.pair_rank(x, y)])
        return 1 if fwd == (x < y) else -1

    def beats(self, x: int, y: int) -> bool:
        return self.f(x, y) == 1

    def signs(self) -> np.ndarray:
        """Matrix F with F[x, y] = f(x, y) and zero diagonal."""
        rows = subsets.combos(self.n, 2)
        m = np.zeros((self.n, self.n), dtype=np.int8)
        s = np.where(self.orient, 1, -1).astype(np.int8)
        m[rows[:, 0], rows[:, 1]] = s
        m[rows[:, 1], rows[:, 0]] = -s
        return m

    def arcs(self) -> list[tuple[int, int]]:
        """One (tail, head) per pair, pairs in ascending rank."""
        return [(int(u), int(v)) if o else (int(v), int(u))
                for (u, v), o in zip(subsets.combos(self.n, 2), self.orient)]

    def out_degrees(self) -> np.ndarray:
        return (self.signs() == 1).sum(axis=1)

    def in_degrees(self) -> np.ndarray:
        return (self.signs() == -1).sum(axis=1)

    def reversed(self) -> Tournament:
        return Tournament(self.n, ~self.orient)

    def restrict(self, vertices: Sequence[int]) -> Tournament:
        """Sub-tournament on ``vertices``, re-indexed in ascending order."""
        vertices = sorted(vertices)
        return Tournament.from_signs(self.signs()[np.ix_(vertices, vertices)])

    def __eq__(self, other):
        if not isinstance(other, Tournament):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.orient, other.orient)

    def __hash__(self):
        return hash((self.n, self.orient.tobytes()))

    def __repr__(self):
        return f"Tournament(n={self.n})"


@dataclass(frozen=True)
class SwitchCertificate:
    subset: frozenset[int]


@dataclass(frozen=True)
class OrientedTwoGraph:
    """g on ordered distinct triples, stored as g(x, y, z) for x < y < z by colex rank."""

    n: int
    positive: np.ndarray  # True where g(sorted triple) = +1

    def g(self, x: int, y: int, z: int) -> int:
        triple = (x, y, z)
        if len(set(triple)) != 3:
            raise ValueError("g is defined on distinct triples")
        order = sorted(range(3), key=triple.__getitem__)
        inversions = sum(order[i] > order[j] for i in range(3) for j in range(i + 1, 3))
        stored = 1 if self.positive[subsets.rank(triple)] else -1
        return stored if inversions % 2 == 0 else -stored

    def __eq__(self, other):
        if not isinstance(other, OrientedTwoGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.positive, other.positive)

    def __hash__(self):
        return hash((self.n, self.positive.tobytes()))


# -- constructions -------------------------------------------------------------

def paley_tournament(spec: FieldSpec) -> Tournament:
    """x -> y iff y - x is a nonzero square; vertices in canonical field order."""
    if not spec.paley_admissible:
        raise NotPaleyAdmissible(f"q = {spec.q} is not 3 mod 4")
    els = spec.elements
    rows = subsets.combos(spec.q, 2)
    return Tournament(spec.q, [chi(els[v] - els[u]) == 1 for u, v in rows])


def extended_paley_tournament(spec: FieldSpec) -> Tournament:
    """x -> y iff D(y, x) is a square, on the q + 1 points of the projective line.

    Index q is [1:0], which every other vertex points to.
    """
    if not spec.paley_admissible:
        raise NotPaleyAdmissible(f"q = {spec.q} is not 3 mod 4")
    return Tournament.from_signs(chi_det_matrix(spec).T)


def random_tournament(n: int, seed: int) -> Tournament:
    rng = np.random.default_rng(seed)
    return Tournament(n, rng.integers(0, 2, size=comb(n, 2)).astype(bool))


def transitive_tournament(n: int) -> Tournament:
    return Tournament(n, np.ones(comb(n, 2), dtype=bool))


# -- Baber's hypergraph ----------------------------------------------------------

def cycle_products(signs: np.ndarray, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Products of f around the three 4-cycles a-b-c-d, a-b-d-c, a-c-b-d of each row."""
    F = np.asarray(signs, dtype=np.int64)
    a, b, c, d = np.asarray(rows).T
    p1 = F[..., a, b] * F[..., b, c] * F[..., c, d] * F[..., d, a]
    p2 = F[..., a, b] * F[..., b, d] * F[..., d, c] * F[..., c, a]
    p3 = F[..., a, c] * F[..., c, b] * F[..., b, d] * F[..., d, a]
    return p1, p2, p3


def is_pattern_quad(t: Tournament, quad: Sequence[int]) -> bool:
    """A 3-cycle plus a fourth vertex beating all three or beaten by all three."""
    for apex in quad:
        x, y, z = (v for v in quad if v != apex)
        cyclic = t.f(x, y) == t.f(y, z) == t.f(z, x)
        uniform = t.f(apex, x) == t.f(apex, y) == t.f(apex, z)
        if cyclic and uniform:
            return True
    return False


def is_reverse_parity_quad(t: Tournament, quad: Sequence[int]) -> bool:
    """Every cyclic order of the four vertices has an odd number of reverse-oriented consecutive pairs."""
    first, *rest = quad
    for perm in itertools.permutations(rest):
        order = (first, *perm)
        reversed_pairs = sum(t.f(order[i], order[(i + 1) % 4]) == -1 for i in range(4))
        if reversed_pairs % 2 == 0:
            return False
    return True


def is_parity_quad(t: Tournament, quad: Sequence[int]) -> bool:
    a, b, c, d = sorted(quad)
    f = t.f
    p1 = f(a, b) * f(b, c) * f(c, d) * f(d, a)
    p2 = f(a, b) * f(b, d) * f(d, c) * f(c, a)
    p3 = f(a, c) * f(c, b) * f(b, d) * f(d, a)
    return p1 == p2 == p3 == -1


def baber_hypergraph(t: Tournament, method: str = "parity") -> Hypergraph:
    """4-sets whose sub-tournament is a 3-cycle with a dominating or dominated fourth vertex.

    ``method="parity"`` tests that the three 4-cycle products are all -1
    (vectorized); ``method="pattern"`` tests the configuration directly.
    """
    rows = subsets.combos(t.n, 4)
    if method == "parity":
        p1, p2, p3 = cycle_products(t.signs(), rows)
        return Hypergraph(t.n, 4, (p1 == -1) & (p2 == -1) & (p3 == -1))
    if method == "pattern":
        return Hypergraph(t.n, 4, [is_pattern_quad(t, row) for row in rows.tolist()])
    raise ValueError(f"unknown method {method!r}")


def baber_density(n: int, trials: int, seed: int) -> tuple[float, float, list[float]]:
    """Mean and standard error of e(H_T) / C(n, 4) over seeded random tournaments.

    Trial i uses seed ``seed + i``.
    """
    total = comb(n, 4)
    samples = [baber_hypergraph(random_tournament(n, seed + i)).num_edges / total for i in range(trials)]
    mean = sum(samples) / trials
    if trials > 1:
        var = sum((x - mean) ** 2 for x in samples) / (trials - 1)
        stderr = sqrt(var / trials)
    else:
        stderr = float("nan")
    return mean, stderr, samples


# -- switching -----------------------------------------------------------------

def _mask(n: int, subset: Iterable[int]) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    for v in subset:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range")
        mask[v] = True
    return mask


def switch(t: Tournament, subset: Iterable[int]) -> Tournament:
    """Reverse every edge between ``subset`` and its complement."""
    mask = _mask(t.n, subset)
    rows = subsets.combos(t.n, 2)
    return Tournament(t.n, t.orient ^ (mask[rows[:, 0]] != mask[rows[:, 1]]))


def switching_equivalent(t1: Tournament, t2: Tournament) -> SwitchCertificate | None:
    """A set A with switch(t1, A) == t2, or None.

    The sign vector is fixed by s(0) = +1, so the certificate never contains vertex 0.
    """
    if t1.n != t2.n:
        raise SizeMismatch(f"tournaments on {t1.n} and {t2.n} vertices")
    if t1.n == 0:
        return SwitchCertificate(frozenset())
    f1, f2 = t1.signs().astype(np.int64), t2.signs().astype(np.int64)
    s = f2[0] * f1[0]
    s[0] = 1
    if not np.array_equal(f2, np.outer(s, s) * f1):
        return None
    return SwitchCertificate(frozenset(int(v) for v in np.flatnonzero(s == -1)))


def normalize_to_sink(t: Tournament, w: int) -> tuple[Tournament, SwitchCertificate]:
    """Switch on the out-neighbourhood of w so that every edge at w points into w."""
    out = frozenset(v for v in range(t.n) if v != w and t.beats(w, v))
    return switch(t, out), SwitchCertificate(out)


def compose_switch_sets(n: int, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    """Switching by A then B equals switching by (A & B) | (~A & ~B)."""
    a, b = set(a), set(b)
    return frozenset(v for v in range(n) if (v in a) == (v in b))


def oriented_two_graph(t: Tournament) -> OrientedTwoGraph:
    """g(x, y, z) = f(x, y) f(y, z) f(z, x)."""
    F = t.signs().astype(np.int64)
    a, b, c = subsets.combos(t.n, 3).T
    g = F[a, b] * F[b, c] * F[c, a]
    positive = g == 1
    positive.setflags(write=False)
    return OrientedTwoGraph(t.n, positive)
