"""tricliq: triangle-weight pruning heuristic for maximum cliques.

The pipeline enumerates a graph's triangles, iteratively removes the
triangles through minimum-weight edges while logging each iteration, picks
the iteration with the largest minimum weight, and grows a clique from a
minimum-weight edge of that iteration.  Exact oracles (branch and bound,
Bron-Kerbosch, and the Boolean-expansion method of Maghout) are bundled so
every heuristic answer can be checked, and the graph families with
exponentially many cliques are available as generators.
"""

from .extraction import (
    CliqueResult,
    NoTrianglesThroughEdgeError,
    PerEdgeCliques,
    cliques_per_min_edge,
    extract_max_clique,
    subgraph_for_edge,
)
from .generators import complete, complete_multipartite, moon_moser
from .graph import (
    DuplicateEdgeError,
    EmptyVertexSetError,
    Graph,
    GraphError,
    InducedSubgraph,
    NonseparabilityReport,
    SelfLoopError,
    VertexRangeError,
    check_nonseparable,
    is_clique,
    ring_sum,
)
from .io import (
    FormatError,
    format_dimacs,
    format_edge_list,
    load_graph,
    parse_dimacs,
    parse_edge_list,
)
from .oracle import (
    BudgetExceededError,
    OracleResult,
    absorb_terms,
    enumerate_maximal_cliques,
    maghout_cliques,
    max_clique_exact,
)
from .pruning import (
    MODE_EARLY_STOP,
    MODE_EXHAUSTIVE,
    EmptyIterationError,
    EmptyTraceError,
    IterationRecord,
    Trace,
    full_trace,
    main_iteration,
    prune_step,
)
from .triangles import (
    MinMax,
    Triangle,
    WeightVector,
    edge_weight_vector,
    enumerate_triangles,
    min_max,
    vertex_weight_vector,
)
from .fixtures import FIXTURE_NAMES, Fixture, load_fixture

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CliqueResult",
    "DuplicateEdgeError",
    "EmptyIterationError",
    "EmptyTraceError",
    "EmptyVertexSetError",
    "FIXTURE_NAMES",
    "Fixture",
    "FormatError",
    "Graph",
    "GraphError",
    "InducedSubgraph",
    "IterationRecord",
    "MODE_EARLY_STOP",
    "MODE_EXHAUSTIVE",
    "MinMax",
    "NonseparabilityReport",
    "NoTrianglesThroughEdgeError",
    "OracleResult",
    "PerEdgeCliques",
    "SelfLoopError",
    "Trace",
    "Triangle",
    "VertexRangeError",
    "WeightVector",
    "absorb_terms",
    "check_nonseparable",
    "cliques_per_min_edge",
    "complete",
    "complete_multipartite",
    "enumerate_maximal_cliques",
    "enumerate_triangles",
    "edge_weight_vector",
    "extract_max_clique",
    "format_dimacs",
    "format_edge_list",
    "full_trace",
    "is_clique",
    "load_fixture",
    "load_graph",
    "maghout_cliques",
    "main_iteration",
    "max_clique_exact",
    "min_max",
    "moon_moser",
    "parse_dimacs",
    "parse_edge_list",
    "prune_step",
    "ring_sum",
    "subgraph_for_edge",
    "vertex_weight_vector",
]
