import itertools

import numpy as np
import pytest

from paley4.designs import non_tournament_example
from paley4.errors import BudgetExceeded
from paley4.hypergraph import Hypergraph, verify_span
from paley4.realize import exhaustive_realizations, odd_cycle_obstruction, realize_as_tournament
from paley4.tournament import baber_hypergraph, random_tournament

from conftest import paley


def test_realize_h7(h7):
    out = realize_as_tournament(h7)
    assert out.realizable and out.status == "Witness"
    assert baber_hypergraph(out.witness) == h7
    assert out.witness.out_degrees()[0] == 0


def test_realize_single_edge():
    h = Hypergraph.from_edges(4, 4, [(0, 1, 2, 3)])
    out = realize_as_tournament(h)
    assert baber_hypergraph(out.witness) == h


def test_realize_non_tournament_example():
    h = non_tournament_example()
    assert (h.n, h.num_edges) == (7, 12)
    out = realize_as_tournament(h)
    assert not out.realizable and out.status == "Unrealizable"
    assert exhaustive_realizations(h) == 0


def test_budget_exceeded(h7):
    with pytest.raises(BudgetExceeded):
        realize_as_tournament(h7, budget=0)


def test_exhaustive_counts_realizations_of_a_tournament():
    # the switching class of T has 2^(n-1) members and exactly one has 0 as a sink
    t = random_tournament(6, 9)
    assert exhaustive_realizations(baber_hypergraph(t)) >= 1


def test_realize_random_tournament_hypergraphs():
    for seed in range(30):
        n = 5 + seed % 5
        h = baber_hypergraph(random_tournament(n, seed))
        out = realize_as_tournament(h)
        assert out.realizable and baber_hypergraph(out.witness) == h


def test_realize_agrees_with_exhaustive_on_random_inputs():
    rng = np.random.default_rng(17)
    for _ in range(60):
        n = int(rng.integers(4, 7))
        quads = list(itertools.combinations(range(n), 4))
        h = Hypergraph.from_edges(n, 4, [q for q in quads if rng.random() < 0.3])
        out = realize_as_tournament(h)
        count = exhaustive_realizations(h)
        assert out.realizable == (count > 0)
        if out.realizable:
            assert baber_hypergraph(out.witness) == h


def test_realize_agrees_with_exhaustive_on_zero_or_two_inputs():
    # 0-or-2 hypergraphs are the interesting ones; sub-configurations of the Paley 4-graphs
    rng = np.random.default_rng(23)
    for p in (7, 11):
        h = paley(p)
        for _ in range(10):
            verts = sorted(rng.choice(h.n, 7, replace=False).tolist())
            sub = h.induced(verts)
            assert verify_span(sub).ok
            out = realize_as_tournament(sub)
            assert out.realizable and exhaustive_realizations(sub) > 0


def test_odd_cycle_obstruction_m11(m11):
    found = odd_cycle_obstruction(m11)
    assert found is not None
    (u, v), cyc = found
    assert (u, v) == (0, 1)
    assert len(cyc) % 2 == 1 and u not in cyc and v not in cyc
    for i in range(len(cyc)):
        assert m11.has_edge((u, v, cyc[i], cyc[(i + 1) % len(cyc)]))


@pytest.mark.parametrize("p", [7, 11])
def test_no_obstruction_for_paley(p):
    assert odd_cycle_obstruction(paley(p)) is None


def test_non_tournament_example_has_bipartite_links():
    assert odd_cycle_obstruction(non_tournament_example()) is None
