"""Total covers of undirected graphs.

A total cover is a set of vertices and edges such that every other
vertex and edge of the graph is adjacent or incident to a member.  The
package provides a matching-based approximation that certifies a factor
of two on every run, exhaustive oracles for desk-scale verification, two
baseline constructions, deterministic instance generators, and a command
line front end (``tcover``).
"""

from .approx import (
    ApproxResult,
    BadVertexAssignment,
    NotMaximumError,
    TraceStep,
    approx_total_cover,
    bad_vertex_assignment,
    greedy_domination_cover,
    matched_vertices_cover,
    total_cover_lower_bound,
)
from .exact import (
    ExactResult,
    SearchLimits,
    TotalGraphCrossCheck,
    cross_check_total_graph,
    exact_dominating_set,
    exact_total_cover,
)
from .graph import (
    BudgetExceededError,
    DuplicateEdgeError,
    Edge,
    Element,
    ElementSet,
    Graph,
    GraphError,
    ParseError,
    SelfLoopError,
    TooLargeError,
    UnknownEdgeError,
    VertexOutOfRangeError,
    all_elements,
    build_graph,
    element_cover_line,
    first_uncovered,
    format_element,
    is_total_cover,
    isolated_vertices,
    parse_cover,
    parse_graph,
    serialize_cover,
    serialize_graph,
    total_graph,
)
from .instances import (
    OddParameterError,
    ParameterOutOfRangeError,
    add_isolated,
    complete,
    cycle,
    enumerate_graphs,
    gnp,
    hard_instance,
    path,
    petersen,
    star,
)
from .matching import (
    Matching,
    brute_force_maximum_matching,
    greedy_maximal_matching,
    maximum_matching,
    verify_matching,
)

__all__ = [
    "ApproxResult",
    "BadVertexAssignment",
    "BudgetExceededError",
    "DuplicateEdgeError",
    "Edge",
    "Element",
    "ElementSet",
    "ExactResult",
    "Graph",
    "GraphError",
    "Matching",
    "NotMaximumError",
    "OddParameterError",
    "ParameterOutOfRangeError",
    "ParseError",
    "SearchLimits",
    "SelfLoopError",
    "TooLargeError",
    "TotalGraphCrossCheck",
    "TraceStep",
    "UnknownEdgeError",
    "VertexOutOfRangeError",
    "add_isolated",
    "all_elements",
    "approx_total_cover",
    "bad_vertex_assignment",
    "brute_force_maximum_matching",
    "build_graph",
    "complete",
    "cross_check_total_graph",
    "cycle",
    "element_cover_line",
    "enumerate_graphs",
    "exact_dominating_set",
    "exact_total_cover",
    "first_uncovered",
    "format_element",
    "gnp",
    "greedy_domination_cover",
    "greedy_maximal_matching",
    "hard_instance",
    "is_total_cover",
    "isolated_vertices",
    "matched_vertices_cover",
    "maximum_matching",
    "parse_cover",
    "parse_graph",
    "path",
    "petersen",
    "serialize_cover",
    "serialize_graph",
    "star",
    "total_cover_lower_bound",
    "total_graph",
    "verify_matching",
]
