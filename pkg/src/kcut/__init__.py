"""Plural-cut graphs: construction, recognition, decomposition, bridging.

The package is organized around three equivalent presentations of the same
family of oriented graphs: cut-trees over star-shaped leaves (`construct`),
graphs carrying per-vertex compasses (`compass`, `bridge`), and a purely
combinatorial characterization via transversal edges (`recognize`).  The
`formats`, `dot`, `generate` and `cli` modules are the operational surface.
"""

from .errors import (
    CompositionError,
    ConfigError,
    DomainError,
    GraphInvariantError,
    KcutError,
    ParseError,
    RewriteError,
    ValidationError,
)
from .graph import SLOTS, Edge, OrientedGraph, SemiPath, Step, VertexClass
from .construct import (
    BasicKGraph,
    Construction,
    IdentityGraph,
    apply_rho_move,
    applicable_rho_moves,
    compose,
    cut_graph,
    decompose_at,
    eliminate_identities,
    leaf,
    make_basic,
    rename_construction,
    rho_equivalent,
    same_compass_graph,
    sigma_canonical,
)
from .compass import (
    Compass,
    LocalCompassGraph,
    compose_local,
    indecent_path_witness,
    is_decent,
    is_local_compass_graph,
    is_y_decent,
    separates_n_from_s,
)
from .bridge import (
    construction_from_compass,
    distinguished_from_compass,
    is_yx_edge,
    is_yx_path,
    lambda_of,
)
from .recognize import (
    Bifurcation,
    Decomposition,
    QFailure,
    QVerdict,
    Verdict,
    decompose,
    is_kgraph,
    is_proper,
    is_qgraph,
    is_transversal_edge,
    qgraph_construction,
    synthesize_compass,
    transversal_bifurcation_witness,
    transversal_edges,
)

__version__ = "0.1.0"
