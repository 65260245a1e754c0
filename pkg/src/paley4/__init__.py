"""Paley 4-graphs, tournament hypergraphs, switching and realizability."""

from .designs import load_m11, non_tournament_example, two_graph_from_graph, verify_two_graph
from .field import FieldElement, FieldSpec, chi, field_make
from .hypergraph import (
    Hypergraph,
    SimpleGraph,
    build_paley_hypergraph,
    de_caen_bound,
    design_parameters,
    fingerprint,
    gamma_graph,
    independent_set_count,
    is_bipartite,
    link_graph,
    verify_span,
)
from .projective import PglElement, ProjPoint, det_pair, pgl_apply, pgl_enumerate, proj_normalize, s_value
from .realize import odd_cycle_obstruction, realize_as_tournament
from .tournament import (
    Tournament,
    baber_hypergraph,
    extended_paley_tournament,
    normalize_to_sink,
    oriented_two_graph,
    paley_tournament,
    random_tournament,
    switch,
    switching_equivalent,
)

__version__ = "0.1.0"
