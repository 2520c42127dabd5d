"""Shuffle-cube family toolkit: construction, analysis, routing, Hamiltonicity.

The public surface re-exports the word codec, adjacency oracles, brute-force
analytics, the vertex-transitivity maps, the routing algorithms and the
Hamiltonian-cycle machinery.
"""

from .errors import (
    ConstructionError,
    DisconnectedGraphError,
    InvalidVertexError,
    ResourceLimitError,
)
from .words import (
    BlockValue,
    Dimension,
    VertexWord,
    assemble,
    blocks,
    block_width,
    format_vertex,
    get_block,
    h4,
    h4_star,
    hamming,
    make_block,
    pair1,
    pair2,
    parse_vertex,
    prefix,
    set_block,
    suffix,
)
from .topology import (
    B_SSQ_LABEL,
    BHVertex,
    BlockGraph,
    C4_LABEL,
    CubeGraph,
    D_BSQ_LABEL,
    MATERIALIZE_CAP,
    TopologyKind,
    V_SETS,
    adjacent,
    bh_neighbors,
    block_graph,
    block_graph_for,
    is_valid_vertex,
    materialize,
    neighbor_sets,
    neighbors,
    v_set,
)
from .analysis import (
    BipartitionResult,
    DiameterResult,
    K4Census,
    TransitivityCertificate,
    bfs_distances,
    bh_pattern_pairs,
    bh_same_neighborhood_pairs,
    bipartition,
    bsq_pattern_pairs,
    clique_number,
    diameter,
    eccentricity,
    edge_transitivity_certificate,
    equivalent_pairs,
    girth,
    is_connected,
    k4_census,
    k4_extends_to_k5,
    same_neighborhood_pairs,
    triangle_counts,
    vertex_transitivity_certificate,
)
from .symmetry import (
    AutomorphismCheck,
    AutomorphismSpec,
    BlockMap,
    apply_map,
    build_phi,
    build_psi,
    verify_automorphism,
)
from .routing import (
    diameter_formula,
    distance_of,
    route_bsq,
    route_ssq,
)
from .hamiltonian import (
    CycleCheck,
    FactorCycle,
    HamiltonianCycle,
    factor_cycle,
    fixture_h1,
    fixture_h2,
    hamiltonian_cycle,
    snake_product,
    step_block_changes,
    validate_cycle,
)
from .claims import ClaimRecord, ClaimsReport, run_claims

__version__ = "0.1.0"
