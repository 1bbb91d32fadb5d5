"""Prime ideal sum graphs of finite products of chain rings and their
strong metric dimension."""

from .clique import clique_number, max_clique, min_vertex_cover
from .formulas import (
    FormulaPrediction,
    Status,
    predicted_clique,
    predicted_sdim,
    predicted_vertex_count,
    predictions_for,
    verify_clique_structure,
)
from .graph import (
    DISCONNECTED,
    UNREACHABLE,
    DisconnectedGraphError,
    Graph,
    ReducedGraph,
    all_pairs_distances,
    diameter,
    is_connected,
    reduce_by_closed_neighborhoods,
    strong_resolving_graph,
)
from .pis import EmptyGraphError, PisGraph, build_pis, is_disconnected_case, to_dot, write_dot
from .report import AnalysisReport, analyze, export_json, load_json, verify_family
from .rings import (
    ClassTag,
    NotLocalError,
    RingClass,
    RingSpec,
    RingSpecError,
    classify,
    enumerate_vertices,
    ideal_sum,
    is_prime_ideal,
    label,
    parse_ring_spec,
)
from .sdim import (
    Method,
    SdimResult,
    TooLargeError,
    is_resolving_set,
    is_strong_resolving_set,
    sdim_bruteforce,
    sdim_via_reduction,
    sdim_via_vertex_cover,
    strongly_resolves,
)

__version__ = "0.1.0"
