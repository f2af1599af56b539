"""Abelian splittings and JSJ-decompositions of Bestvina-Brady groups.

Given a finite simplicial graph, decide whether the right-angled Artin group
and the Bestvina-Brady group on it split over abelian subgroups, write down
Dicks-Leary presentations, and build the vertex-elliptic (RAAG) and
edge-elliptic (BBG) abelian JSJ-decompositions as labelled trees.
"""

from .errors import (
    DisconnectedInput,
    GraphError,
    HypothesisViolation,
    InternalError,
    NotSeparating,
    ParseError,
    SimplicialityError,
    SizeLimitExceeded,
    TooSmall,
    UnknownEdge,
    UnknownVertex,
)
from .graph import (
    ChordalityCertificate,
    Clique,
    SimplicialGraph,
    biconnected_blocks,
    connected_components,
    cut_vertices,
    enumerate_cliques,
    format_graph,
    induced_subgraph,
    is_chordal,
    is_connected,
    link_of_edge,
    link_of_vertex,
    load_graph,
    parse_graph,
    spanning_tree,
    star_of_edge,
    star_of_vertex,
)
from .jsj import (
    GoGEdge,
    GoGVertex,
    GraphOfGroups,
    JSJReport,
    export_dot,
    export_json,
    jsj_decomposition,
    jsj_report,
    verify_decomposition,
)
from .oracle import (
    SweepReport,
    brute_abelianization,
    brute_cliques,
    brute_cut_vertices,
    brute_induced_long_cycle,
    brute_separating_cliques,
    sweep_small_graphs,
)
from .presentation import (
    DirectedEdge,
    GroupDescriptor,
    GroupPresentation,
    abelianization,
    check_finitely_presented,
    dicks_leary_presentation,
    is_commutator,
    recognize_special,
    reduced_presentation,
)
from .splitting import (
    SplittingVerdict,
    bbg_splitting_verdict,
    minimal_separating_cliques,
    raag_splitting_verdict,
    separating_cliques,
    splitting_ranks,
    star_clique_check,
)
from .topology import FlagComplex, HomologySummary, flag_complex, h1_summary, is_flag_simply_connected

__version__ = "0.1.0"
# bumped whenever the JSON layout of any CLI output changes
FORMAT_VERSION = 1
