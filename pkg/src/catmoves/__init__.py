"""Maps s_i on plane trees and standard Young tableaux, local moves, and their move graphs."""

from .core import (
    ROOT,
    Partition,
    PlaneTree,
    RootedTreeView,
    YoungTableau,
    format_tableau,
    format_tree,
    is_symmetric,
    make_partition,
    make_tableau,
    make_tree,
    mirror,
    parse_tableau,
    parse_tree,
    phi,
    phi_inverse,
    total_descendants,
    total_distance,
    tree_view,
)
from .enumeration import (
    TreeIndex,
    count_trees,
    enumerate_syt,
    enumerate_trees,
    hook_length_count,
    rank_tree,
    unrank_tree,
)
from .movegraph import (
    ComponentReport,
    CoverageReport,
    GeneratorKind,
    GeneratorSet,
    GradingReport,
    MoveGraph,
    build_graph,
    connected_components,
    connecting_word,
    export_graph,
    grading_report,
    read_graph_json,
    si_move_coverage,
    witness_path,
)
from .moves import (
    LocalMoveRecord,
    MoveKind,
    PairTag,
    apply_word,
    classify_pair,
    enumerate_local_moves,
    is_si_local_move,
    local_move,
    s_i_C,
    s_i_tableau,
    s_i_tree,
)

__version__ = "0.1.0"
