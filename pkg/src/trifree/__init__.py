"""Exhaustive-search toolkit for triangle-free graphs that avoid a
near-complete pattern in the complement: censuses, minimum edge counts,
degree-sequence feasibility bounds, gluing extensions, and circulant
witnesses."""

__version__ = "0.1.0"

from .bitgraph import (  # noqa: F401
    DegreeHistogram,
    Graph,
    degree_histogram,
    is_triangle_free,
    max_edge_bound,
    residual,
    z_value,
)
from .bounds import Bound, BoundTable, TableView, propagate, ramsey_upper_bound  # noqa: F401
from .canon import are_isomorphic, canonical_form, canonical_graph  # noqa: F401
from .circulant import CirculantSpec, build_circulant, search_circulants, verify_witness  # noqa: F401
from .enumeration import (  # noqa: F401
    Budget,
    CensusBuilder,
    edge_removal_closure,
    enumerate_min_edges,
    full_census,
    generate_mtf_ramsey,
    is_maximal_triangle_free,
)
from .feasibility import (  # noqa: F401
    closed_form_bound,
    feasible_degree_histograms,
    graph_deficiency,
    min_edges_bound,
    survives_vertex_refinement,
    vertex_deficiency,
)
from .gluing import GlueJob, eligible_glue_sets, glue_census, glue_extend, residual_prune  # noqa: F401
from .graph6 import decode_graph6, encode_graph6  # noqa: F401
from .patterns import Pattern, contains_pattern_in_complement, is_ramsey_graph  # noqa: F401
