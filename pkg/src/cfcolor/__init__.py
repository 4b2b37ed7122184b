"""Conflict-free graph coloring toolkit.

Library layout:

- :mod:`cfcolor.graph` -- immutable simple graphs, line graphs, edge removal
- :mod:`cfcolor.verify` -- conflict-free verifiers over vertices and edges
- :mod:`cfcolor.exact` -- exact chromatic number/index by canonical search
- :mod:`cfcolor.pseudoforest` -- anchored 3-coloring of pseudoforests
- :mod:`cfcolor.linecf` -- round-based randomized edge coloring pipeline
- :mod:`cfcolor.nearregular` -- two-stage coloring for near-regular graphs
- :mod:`cfcolor.lowerbound` -- unsatisfied-edge finders on complete graphs
- :mod:`cfcolor.generators` / :mod:`cfcolor.bench` / :mod:`cfcolor.cli` --
  graph generators, benchmark harness, command line front end
"""

from .exact import (ExactResult, SearchBudgetExceeded, cf_chromatic_index,
                    cf_chromatic_number, greedy_proper_edge_coloring,
                    is_cf_vertex_colorable)
from .graph import (Graph, GraphInputError, build_graph, connected_components,
                    line_graph, parse_edgelist, remove_edges, subgraph_of_edges)
from .linecf import RoundFailure, SolverParams, cf_edge_coloring, run_round, sample_round
from .lowerbound import (PaletteClasses, UnsatSearchResult, find_unsatisfied_edge,
                         palette_classes, unsat_color_threshold, validate_certificate)
from .nearregular import (DegreeRatioError, NearRegularParams, NearRegularResult,
                          RetryCapExceeded, color_near_regular, sample_dominating_subset)
from .pseudoforest import (PseudoforestError, UniqueColorMap, color_pseudoforest,
                           find_cycle, proper_cycle_3coloring)
from .verify import (ColoringInputError, VerificationReport, satisfied_edges,
                     satisfied_with, verify_edge_cf, verify_vertex_cf)

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphInputError", "build_graph", "line_graph", "remove_edges",
    "subgraph_of_edges", "connected_components", "parse_edgelist",
    "ColoringInputError", "VerificationReport", "verify_vertex_cf", "verify_edge_cf",
    "satisfied_with", "satisfied_edges",
    "ExactResult", "SearchBudgetExceeded", "is_cf_vertex_colorable",
    "cf_chromatic_number", "cf_chromatic_index", "greedy_proper_edge_coloring",
    "PseudoforestError", "UniqueColorMap", "color_pseudoforest", "find_cycle",
    "proper_cycle_3coloring",
    "SolverParams", "RoundFailure", "sample_round", "run_round", "cf_edge_coloring",
    "NearRegularParams", "NearRegularResult", "DegreeRatioError", "RetryCapExceeded",
    "sample_dominating_subset", "color_near_regular",
    "PaletteClasses", "UnsatSearchResult", "unsat_color_threshold", "palette_classes",
    "find_unsatisfied_edge", "validate_certificate",
]
