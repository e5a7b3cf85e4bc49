"""Star edge-coloring toolkit.

A star k-edge-coloring is a proper edge coloring with no bi-colored
4-edge path and no bi-colored 4-cycle; the star chromatic index is the
least such k.  The package verifies colorings, decides and optimizes
the index exactly on small graphs, builds the explicit colorings for
complete graphs / balanced bipartite graphs / bounded-degree graphs /
2-connected cubic graphs, checks the double-counting certificate that
lower-bounds complete graphs, and decides star 4-colorability of cubic
graphs through covering maps onto the 3-cube.
"""

from .ap3 import Ap3Set, ap3_set_of_size, behrend_set, greedy_ap3_set, verify_ap3
from .constructions import (
    FrugalColoring,
    ProductColoring,
    color_kn_recursive,
    color_kn_sum,
    color_knn_from_kn,
    compose_star_coloring,
    distance2_edge_coloring,
    frugal_coloring,
)
from .counting import (
    CountingCertificate,
    check_counting_identities,
    counting_certificate,
    kn_lower_bound,
)
from .covers import (
    CoverMap,
    LocalPattern,
    cube_reference_coloring,
    derive_q3_cover,
    find_cover,
    lift_coloring,
    local_color_pattern,
    missing_color_map,
    voltage_double_cover,
)
from .cubic import (
    Decomposition,
    cubic_seven_coloring,
    cycle_star_coloring,
    perfect_matchings,
)
from .graphs import (
    EdgeColoring,
    Graph,
    build_graph,
    complete_bipartite,
    complete_graph,
    cube_graph,
    cycle_graph,
    edge_distance,
    heawood_graph,
    named_graph,
    path_graph,
    petersen_graph,
)
from .formats import (
    coloring_document,
    parse_coloring_document,
    parse_edgelist,
    parse_graph6,
    to_edgelist,
    to_graph6,
)
from .solver import (
    IndexOutcome,
    SolveBudget,
    SolveOutcome,
    greedy_star_coloring,
    star_chromatic_index,
    star_decision,
)
from .verify import (
    GlueReport,
    Violation,
    can_extend,
    glue_check,
    is_proper,
    verify_star,
)

__version__ = "0.1.0"

__all__ = [
    "Ap3Set",
    "CountingCertificate",
    "CoverMap",
    "Decomposition",
    "EdgeColoring",
    "FrugalColoring",
    "GlueReport",
    "Graph",
    "IndexOutcome",
    "LocalPattern",
    "ProductColoring",
    "SolveBudget",
    "SolveOutcome",
    "Violation",
    "ap3_set_of_size",
    "behrend_set",
    "build_graph",
    "can_extend",
    "check_counting_identities",
    "color_kn_recursive",
    "color_kn_sum",
    "color_knn_from_kn",
    "coloring_document",
    "complete_bipartite",
    "complete_graph",
    "compose_star_coloring",
    "counting_certificate",
    "cube_graph",
    "cube_reference_coloring",
    "cubic_seven_coloring",
    "cycle_graph",
    "cycle_star_coloring",
    "derive_q3_cover",
    "distance2_edge_coloring",
    "edge_distance",
    "find_cover",
    "frugal_coloring",
    "glue_check",
    "greedy_ap3_set",
    "greedy_star_coloring",
    "heawood_graph",
    "is_proper",
    "kn_lower_bound",
    "lift_coloring",
    "local_color_pattern",
    "missing_color_map",
    "named_graph",
    "parse_coloring_document",
    "parse_edgelist",
    "parse_graph6",
    "path_graph",
    "perfect_matchings",
    "petersen_graph",
    "star_chromatic_index",
    "star_decision",
    "to_edgelist",
    "to_graph6",
    "verify_ap3",
    "verify_star",
    "voltage_double_cover",
]
