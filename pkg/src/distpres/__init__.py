"""Distance-preserving (dp) and sequentially distance-preserving (sdp) graphs.

Graphs are immutable bitset structures on vertices ``0..n-1``; vertex sets are
``int`` bitmasks.  The main entry points:

>>> from distpres import cycle, dp_profile, find_sdp_ordering
>>> sorted(dp_profile(cycle(5)).ddp)
[1, 2, 3, 5]
>>> find_sdp_ordering(cycle(5)) is None
True
"""

from .errors import (
    Disconnected,
    EmptySet,
    GraphError,
    InvalidSpec,
    NotCutVertex,
    OutOfRange,
    OverlappingConstraint,
    ParseError,
    SelfLoop,
    TooLarge,
)
from .graph import (
    UNREACHABLE,
    Graph,
    apsp,
    build_graph,
    cut_vertices,
    graph_power,
    induced_subgraph,
    is_connected,
    mask_of,
    members,
    min_degree,
    neighborhood,
)
from .isometry import (
    DpConstraint,
    DpProfile,
    ddp_constrained,
    dp_profile,
    find_isometric_of_order,
    is_dp,
    is_isometric,
)
from .simplicial import (
    ChordalityReport,
    EliminationOrdering,
    OrderingKind,
    chordality,
    find_k_simplicial_ordering,
    find_sdp_ordering,
    find_weakly_k_simplicial_ordering,
    is_k_chordal,
    is_k_simplicial,
    is_sdp,
    is_weakly_k_simplicial,
    verify_ordering,
)
from .decomposition import (
    PathJoinSpec,
    SeparableSplit,
    build_path_join,
    compose_ddp,
    ddp_via_decomposition,
    path_join_ddp,
    split_at_cut_vertex,
)
from .families import (
    Attachment,
    CkLSpec,
    build_ckl,
    complete,
    cycle,
    enumerate_ckl,
    figure1_graph,
    path,
    sample_ckl,
)
from .codecs import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6

__version__ = "0.1.0"
