"""drskit: exact resolving, doubly resolving and doubly distance resolving
set computations on general graphs, Hamming graphs, hypercubes and folded
hypercubes, with the coin-weighing bridge and the 3DM hardness gadgets."""

from ._kernels import BACKEND
from .cover import CoverInstance, CoverResult, solve_cover_exact
from .errors import (
    FormatError,
    InfeasibleCoverError,
    NotConnectedError,
    SizeCapError,
)
from .families import (
    CubeFamily,
    FoldedFamily,
    HammingFamily,
    build_graph,
    double_resolving_map,
    fold_resolving_map,
    folded_ddrs_even,
    folded_ddrs_odd,
    hamming_ddrs_constant,
    hamming_ddrs_levels,
    parse_family,
    unfold_resolving_map,
)
from .graph import (
    Graph,
    UNREACHABLE,
    all_pairs_distances,
    cartesian_product,
    format_edge_list,
    from_edge_list,
    is_connected,
    read_edge_list,
)
from .resolving import (
    compose_drs,
    ddrs_witness,
    distance_vector,
    doubly_resolving_witness,
    is_ddrs,
    is_doubly_resolving,
    is_resolving,
    resolving_witness,
)
from .coinweigh import (
    WeighingStrategy,
    algorithm1_bounds,
    brute_force_M,
    drs_to_strategy,
    extend_strategy,
    is_weighing_strategy,
    lindstrom_complex,
    project_strategy,
    strategy_to_drs,
    translate_landmarks,
)
from .npc import (
    GadgetGraph,
    ThreeDMInstance,
    build_gadget,
    matching_cost,
    parse_3dm,
    witness_set,
)
from .solver import (
    SolveResult,
    brute_force_min,
    build_beta_cover,
    build_phi_cover,
    build_psi_cover_anchored,
    phi_of_graph,
    solve_beta,
    solve_phi,
    solve_psi,
    solve_psi_anchored,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CoverInstance",
    "CoverResult",
    "CubeFamily",
    "FoldedFamily",
    "FormatError",
    "GadgetGraph",
    "Graph",
    "HammingFamily",
    "InfeasibleCoverError",
    "NotConnectedError",
    "SizeCapError",
    "SolveResult",
    "ThreeDMInstance",
    "UNREACHABLE",
    "WeighingStrategy",
    "algorithm1_bounds",
    "all_pairs_distances",
    "brute_force_M",
    "brute_force_min",
    "build_beta_cover",
    "build_gadget",
    "build_graph",
    "build_phi_cover",
    "build_psi_cover_anchored",
    "cartesian_product",
    "compose_drs",
    "ddrs_witness",
    "distance_vector",
    "double_resolving_map",
    "doubly_resolving_witness",
    "drs_to_strategy",
    "extend_strategy",
    "fold_resolving_map",
    "folded_ddrs_even",
    "folded_ddrs_odd",
    "format_edge_list",
    "from_edge_list",
    "hamming_ddrs_constant",
    "hamming_ddrs_levels",
    "is_connected",
    "is_ddrs",
    "is_doubly_resolving",
    "is_resolving",
    "is_weighing_strategy",
    "lindstrom_complex",
    "matching_cost",
    "parse_3dm",
    "parse_family",
    "phi_of_graph",
    "project_strategy",
    "read_edge_list",
    "resolving_witness",
    "solve_beta",
    "solve_cover_exact",
    "solve_phi",
    "solve_psi",
    "solve_psi_anchored",
    "strategy_to_drs",
    "translate_landmarks",
    "unfold_resolving_map",
    "witness_set",
]
