"""Text formats for hypergraphs and tournaments.

Hypergraph::

    hypergraph k=<k> n=<n>
    <v_1> <v_2> ... <v_k>        one edge per line, increasing, sorted by rank

Tournament::

    tournament n=<n>
    <u> <v>                      u -> v, one line per pair in ascending pair rank

Lines starting with ``#`` are ignored on input.
"""

from __future__ import annotations

import re
from math import comb

import numpy as np

from . import subsets
from .errors import FormatError
from .hypergraph import Hypergraph
from .tournament import Tournament

_HG_HEADER = re.compile(r"^hypergraph k=(\d+) n=(\d+)$")
_T_HEADER = re.compile(r"^tournament n=(\d+)$")


def hypergraph_to_text(h: Hypergraph) -> str:
    lines = [f"hypergraph k={h.k} n={h.n}"]
    lines += [" ".join(map(str, e)) for e in h.edges()]
    return "\n".join(lines) + "\n"


def tournament_to_text(t: Tournament) -> str:
    lines = [f"tournament n={t.n}"]
    lines += [f"{u} {v}" for u, v in t.arcs()]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())
            if line.strip() and not line.lstrip().startswith("#")]


def _ints(lineno: int, line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines or not (m := _HG_HEADER.match(lines[0][1])):
        raise FormatError("missing 'hypergraph k=<k> n=<n>' header")
    k, n = int(m.group(1)), int(m.group(2))
    flags = np.zeros(comb(n, k), dtype=bool)
    for lineno, line in lines[1:]:
        verts = _ints(lineno, line)
        if len(verts) != k:
            raise FormatError(f"line {lineno}: expected {k} vertices, got {len(verts)}")
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise FormatError(f"line {lineno}: vertices must be strictly increasing")
        if verts and (verts[0] < 0 or verts[-1] >= n):
            raise FormatError(f"line {lineno}: vertex out of range [0, {n})")
        flags[subsets.rank(verts)] = True
    return Hypergraph(n, k, flags)


def parse_tournament(text: str) -> Tournament:
    lines = _content_lines(text)
    if not lines or not (m := _T_HEADER.match(lines[0][1])):
        raise FormatError("missing 'tournament n=<n>' header")
    n = int(m.group(1))
    arcs = []
    for lineno, line in lines[1:]:
        verts = _ints(lineno, line)
        if len(verts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        arcs.append(tuple(verts))
    try:
        return Tournament.from_arcs(n, arcs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_any(text: str) -> Hypergraph | Tournament:
    lines = _content_lines(text)
    head = lines[0][1] if lines else ""
    if head.startswith("hypergraph"):
        return parse_hypergraph(text)
    if head.startswith("tournament"):
        return parse_tournament(text)
    raise FormatError("unrecognised file: expected a hypergraph or tournament header")


def read_any(path) -> Hypergraph | Tournament:
    with open(path) as fh:
        return parse_any(fh.read())


def write_text(path, obj) -> None:
    text = hypergraph_to_text(obj) if isinstance(obj, Hypergraph) else tournament_to_text(obj)
    with open(path, "w") as fh:
        fh.write(text)
