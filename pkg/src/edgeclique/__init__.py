"""Edge-clique graphs and everything the library computes on them.

Public surface, re-exported here:

- graphs: ``Graph`` plus the standard constructors and codecs
- edge-clique graphs: construction, iteration, brute-force independent
  edge sets
- polynomial engines: cotree DP for cographs, pruning sequences and
  weight-transfer rules for distance-hereditary graphs
- covers: exact edge-clique cover solver, verification, lower bounds
- Latin squares: finite-field MOLS families and the optimal multipartite
  covers they induce
- hardness: executable reductions with empirical end-to-end checks
"""

from .cliques import DEFAULT_GUARD, clique_number, maximal_cliques
from .codec import (
    emit_edge_list_json,
    emit_graph6,
    parse_edge_list_json,
    parse_graph,
    parse_graph6,
)
from .cograph import (
    AlphaPrimeCertificate,
    alpha_prime_cograph,
    alpha_prime_pair,
    d_prime,
    is_trivially_perfect,
)
from .cotree import Cotree, cotree_decompose, cotree_mwis, cotree_realizes, restrict
from .cover import (
    CliqueCover,
    GyarfasBound,
    ThetaResult,
    clique_cover_exact,
    chromatic_number_exact,
    gyarfas_bound,
    theta_e_exact,
    verify_cover,
)
from .dh import (
    PruningSequence,
    PruningStep,
    alpha_prime_dh,
    is_distance_hereditary,
    mwis_dh,
    pruning_sequence,
    rebuild,
)
from .edge_clique import (
    EdgeCliqueGraph,
    alpha_prime_bruteforce,
    edge_clique_graph,
    edges_independent,
    ke_iterate,
)
from .errors import (
    GraphFormatError,
    GuardExceeded,
    NotCograph,
    NotDistanceHereditary,
)
from .generators import (
    enumerate_cographs,
    random_cograph,
    random_distance_hereditary,
    random_family,
    random_graph,
)
from .graph import (
    Graph,
    are_isomorphic,
    cocktail_party,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
    special_graph,
    union,
    wheel_graph,
)
from .hardness import (
    ClauseGadget,
    CnfFormula,
    LiftedInstance,
    ReductionInstance,
    SatVcReport,
    build_clause_gadget,
    decide_sat_via_vc,
    lift_alpha_instance,
    parse_dimacs,
    sat_oracle,
    sat_to_vc_instance,
)
from .mols import (
    LatinSquare,
    MolsFamily,
    check_orthogonal,
    cover_from_mols,
    mols_family,
)
from .oracles import mis_exact, vc_exact
from .structure import equivalent_pairs, is_odd_wheel_free

__version__ = "0.1.0"
