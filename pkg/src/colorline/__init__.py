"""Color-line graphs: construction, recognition and exhaustive oracles.

The color-line graph of an edge-colored graph H has the edges of H as
vertices, two of them adjacent when the edges are incident or share a color.
This package builds color-line graphs, recognizes line graphs and proper
k-color-line graphs with constructive root certificates, and cross-checks
every recognizer against brute-force oracles on small instances.
"""

__version__ = "0.1.0"

from .colored import (
    ColorLineResult,
    EdgeColoredGraph,
    color_line_graph,
    line_graph,
    max_independent_set,
    max_rainbow_matching,
    validate_proper,
)
from .core import (
    Graph,
    Matching,
    VertexSet,
    are_isomorphic,
    complement,
    connected_components,
    enumerate_labeled_graphs,
    find_clique_at_least,
    induced_subgraph,
    is_co_bipartite,
    maximum_matching,
)
from .errors import (
    BudgetExceededError,
    CapabilityError,
    ColorlineError,
    GraphArgumentError,
    InternalContradictionError,
    ParseError,
)
from .krausz import (
    KrauszFamily,
    build_root_from_krausz,
    check_krausz_color,
    check_krausz_proper,
)
from .linegraph import (
    LineCertificate,
    beineke_violation,
    is_line_graph_bipartite_fast,
    krausz_partition,
    recognize_line_graph,
)
from .oracles import (
    LineBigraphInstance,
    lift_k1,
    oracle_k_color_line,
    oracle_line_bigraph,
    oracle_proper_k_color_line,
    reduce_line_bigraph_to_2cl,
)
from .recognize import (
    ProperCertificate,
    Refusal,
    check_partition_characterization,
    cubic_proper_root,
    recognize_proper_2,
    recognize_proper_k,
)

__all__ = [name for name in dir() if not name.startswith("_")]
