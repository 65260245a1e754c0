"""Colexicographic ranking of k-subsets of [0, n).

rank({a_0 < a_1 < ... < a_{k-1}}) = sum_i C(a_i, i + 1)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np


def rank(subset: Iterable[int]) -> int:
    return sum(comb(a, i + 1) for i, a in enumerate(sorted(subset)))


def unrank(r: int, k: int) -> tuple[int, ...]:
    out = []
    for i in range(k, 0, -1):
        a = i - 1
        while comb(a + 1, i) <= r:
            a += 1
        out.append(a)
        r -= comb(a, i)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def binom_table(n: int, k: int) -> np.ndarray:
    """T[a, i] = C(a, i) for a <= n, i <= k, as int64."""
    t = np.array([[comb(a, i) for i in range(k + 1)] for a in range(n + 1)], dtype=np.int64)
    t.setflags(write=False)
    return t


def rank_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """Colex ranks of each row of a (N, k) array whose rows are strictly increasing."""
    rows = np.asarray(rows)
    k = rows.shape[1]
    t = binom_table(n, k)
    return sum(t[rows[:, i], i + 1] for i in range(k)) if k else np.zeros(len(rows), dtype=np.int64)


@lru_cache(maxsize=None)
def combos(n: int, k: int) -> np.ndarray:
    """All k-subsets of [0, n) as rows of an array, row r having colex rank r."""
    rows = np.array(list(itertools.combinations(range(n), k)), dtype=np.int64).reshape(-1, k)
    out = np.empty_like(rows)
    out[rank_rows(rows, n)] = rows
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def sub_positions(m: int, k: int) -> np.ndarray:
    """Position tuples of the k-subsets of an m-set, shape (C(m,k), k)."""
    out = np.array(list(itertools.combinations(range(m), k)), dtype=np.int64).reshape(-1, k)
    out.setflags(write=False)
    return out


def sub_ranks(rows: np.ndarray, k: int, n: int) -> np.ndarray:
    """For each row (an m-subset), colex ranks of all its k-subsets: shape (N, C(m,k))."""
    rows = np.asarray(rows)
    pos = sub_positions(rows.shape[1], k)
    t = binom_table(n, k)
    out = np.zeros((rows.shape[0], len(pos)), dtype=np.int64)
    for i in range(k):
        out += t[rows[:, pos[:, i]], i + 1]
    return out


def pair_rank(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def normalize(subset: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    s = tuple(sorted(int(x) for x in subset))
    if len(s) != k or len(set(s)) != k:
        raise ValueError(f"expected {k} distinct vertices, got {subset}")
    if s and (s[0] < 0 or s[-1] >= n):
        raise ValueError(f"vertex out of range [0, {n}): {subset}")
    return s
