"""Minimum equicut sizes of graphs, parity signed graphs, and the
closed-form block cuts of cycle powers, with exact and heuristic solvers."""

from .errors import (
    DisconnectedGraphError,
    EnumerationCapError,
    EquicutError,
    InvalidInputError,
)
from .formulas import (
    BlockCutSpec,
    block_cut_sum_identity,
    block_cut_value,
    block_params,
    boundary_count_closed_form,
    boundary_count_direct,
    kang_upper_bound,
    known_rna,
)
from .graphs import (
    MAX_VERTICES,
    Graph,
    GraphFamilySpec,
    circular_distance,
    graph_from_edges,
    graph_from_json_dict,
    graph_to_json_dict,
    is_rotation_symmetric,
    load_graph,
    make_circulant,
    make_complete,
    make_cycle,
    make_cycle_power,
    save_graph,
)
from .parity import (
    Equicut,
    ParityLabeling,
    SignedGraph,
    equicut_size,
    is_balanced,
    is_parity_signed,
    negative_edge_count,
    parity_switch,
    signature_from_labeling,
    switch_vertices,
)
from .solver import (
    SolveResult,
    SolverConfig,
    edge_connectivity,
    rna_branch_and_bound,
    rna_exhaustive,
    rna_local_search,
    rna_lower_bound,
)
from .sweep import SweepRow, compute_sweep_row, run_sweep, write_sweep_outputs

__version__ = "0.1.0"

__all__ = [
    "BlockCutSpec",
    "DisconnectedGraphError",
    "EnumerationCapError",
    "Equicut",
    "EquicutError",
    "Graph",
    "GraphFamilySpec",
    "InvalidInputError",
    "MAX_VERTICES",
    "ParityLabeling",
    "SignedGraph",
    "SolveResult",
    "SolverConfig",
    "SweepRow",
    "block_cut_sum_identity",
    "block_cut_value",
    "block_params",
    "boundary_count_closed_form",
    "boundary_count_direct",
    "circular_distance",
    "compute_sweep_row",
    "edge_connectivity",
    "equicut_size",
    "graph_from_edges",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "is_balanced",
    "is_parity_signed",
    "is_rotation_symmetric",
    "kang_upper_bound",
    "known_rna",
    "load_graph",
    "make_circulant",
    "make_complete",
    "make_cycle",
    "make_cycle_power",
    "negative_edge_count",
    "parity_switch",
    "rna_branch_and_bound",
    "rna_exhaustive",
    "rna_local_search",
    "rna_lower_bound",
    "run_sweep",
    "save_graph",
    "signature_from_labeling",
    "switch_vertices",
    "write_sweep_outputs",
]
