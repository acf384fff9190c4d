"""Thin spanning trees in embedded multigraphs and ATSP rounding.

Public surface re-exported here; see README for the command-line tools.
"""

from .atsp import (
    Tour,
    atsp_approx,
    discretize,
    expand_support_embedding,
    orient_tree,
    round_to_tour,
    symmetrize,
)
from .dual import (
    Cut,
    DualGraph,
    cut_to_dual_cycles,
    dual_girth,
    edge_distance,
    geometric_dual,
)
from .embedding import (
    EmbeddedGraph,
    build_embedding,
    expand_parallel,
    genus,
    trace_faces,
)
from .flows import edge_connectivity
from .formats import read_atsp, read_emb, write_atsp, write_emb
from .heldkarp import ATSPInstance, HKSolution, solve_held_karp
from .oracle import (
    ThinnessReport,
    brute_force_atsp,
    brute_force_edge_connectivity,
    brute_force_thinness,
    verify_tour,
)
from .pipeline import (
    WeightedThinTree,
    bounded_genus_thin_tree,
    genus_bound,
    weighted_thin_tree,
)
from .spanning import (
    Thread,
    ThinTreeResult,
    alpha,
    find_threads,
    select_far_edge_set,
    thin_spanning_tree,
)
from .surgery import (
    SurgeryLog,
    delete_dual_cycle,
    find_short_dual_cycle,
    increase_dual_girth,
)

__all__ = [name for name in dir() if not name.startswith("_")]
