"""Local maximum stable sets of graphs and their line graphs.

Exact solvers for stable sets and matchings, König-Egerváry certificates,
checks relating Ψ(G) to Ψ(L(G)), and an exhaustive small-graph atlas.
"""

__version__ = "0.1.0"

from .errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    HypothesisViolated,
    InvalidCutSides,
    LoopRejected,
    NotAMatching,
    ParseError,
    TooLarge,
    UnknownEdge,
    UnknownVertex,
)
from .graph import (
    Graph,
    LineMap,
    build_graph,
    components,
    cut_set,
    delete,
    induced_subgraph,
    is_bipartite,
    is_connected,
    line_graph,
    neighborhood,
)
from .canonical import canonical_certificate
from .formats import from_graph6, parse_edgelist, read_graph, to_graph6
from .stability import (
    enumerate_maximum_stable_sets,
    enumerate_psi,
    extend_to_maximum_stable,
    has_proper_lmss,
    is_local_maximum_stable,
    is_stable,
    stability_number,
)
from .matching import (
    enumerate_maximum_matchings,
    extendable_to_maximum,
    is_maximal_matching,
    is_uniquely_restricted,
    matching_number,
    maximum_matching,
    symmetric_difference_decomposition,
)
from .kec import KECertificate, is_koenig_egervary, verify_matching_cut_lemma
from .duality import (
    FIXTURES,
    converse_witnesses,
    fixture,
    open_question_probe,
    verify_corollary1,
    verify_nt_extension,
    verify_theorem2,
)
from .atlas import ScanConfig, enumerate_connected_graphs, scan
