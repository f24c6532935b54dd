"""Exhaustive classification of graphs under local complementation.

Computes vertex-minor Ramsey thresholds by three-phase census runs over
LC orbits, with graph6 I/O, isomorph-free generation, full-orbit negative
certificates, extremal-graph analysis, and building-block lower bounds.
"""

from .graphs import (
    MAX_VERTICES,
    Graph,
    are_isomorphic,
    canonical_form,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    induced_subgraph,
    join,
    local_complement,
    path_graph,
    permute,
    petersen_graph,
    pivot,
)
from .graph6 import Graph6Error, decode, encode
from .invariants import (
    InvariantRecord,
    char_poly,
    chromatic_number,
    clique_number,
    components,
    degree_sequence,
    diameter,
    girth,
    has_independent_set,
    independence_number,
    invariant_record,
    is_connected,
)
from .orbits import (
    BUDGET,
    EXHAUSTED,
    FOUND,
    Certificate,
    OrbitSummary,
    beta,
    beta_disconnected,
    enumerate_orbit,
    make_certificate,
    orbit_search,
    verify_certificate,
)
from .generate import generate_all, generate_connected
from .classify import (
    P1,
    P2,
    P3,
    P3_BUDGETED,
    PhaseCounts,
    PhaseRecord,
    classify_codes,
    classify_graphs,
    classify_one,
    ramsey_value_search,
)
from .structure import (
    ObstructionPattern,
    circle_graph_obstructions,
    find_induced_pattern_in_orbit,
    identify_named,
    lc_class_partition,
    wheel,
)
from .bounds import (
    BlockSpec,
    BoundRow,
    asymptotic_leading,
    bound_table,
    building_block_bound,
    corollary_bound,
    make_block,
)

__version__ = "0.1.0"
