"""kdist: top-k shortest-path distance index and link-prediction benchmark."""

from .errors import (
    CapacityError,
    ContractViolationError,
    DegenerateInputError,
    EdgeListParseError,
    IndexFormatError,
    KdistError,
)
from .graph import (
    Graph,
    VertexOrder,
    degree_order,
    load_edge_list,
    parse_edge_list,
    relabel,
    remove_edges,
    write_edge_list,
)
from .index import (
    SENTINEL,
    IndexStats,
    TopKIndex,
    build_index,
    compute_loop_label,
    deserialize_index,
    index_stats,
    serialize_index,
)
from .estimators import (
    AdamicAdar,
    CommonNeighbors,
    JaccardCoefficient,
    PreferentialAttachment,
    TopKDistanceIndex,
    TopKSimilarity,
    make_predictor,
)
from .evaluation import (
    EdgeSplit,
    EvalConfig,
    EvalReport,
    PredictorResult,
    auroc,
    run_experiment,
    sample_negatives,
    split_edges,
)
from .query import count_paths_within, query, query_by_id, top1_distance
from .similarity import (
    PREDICTOR_NAMES,
    parse_predictor,
    score_adamic_adar,
    score_common_neighbors,
    score_jaccard,
    score_preferential_attachment,
    score_topk,
)
from .walks import restricted_topk_loops, topk_walk_lengths

__version__ = "0.1.0"

__all__ = [
    "AdamicAdar",
    "CapacityError",
    "CommonNeighbors",
    "ContractViolationError",
    "DegenerateInputError",
    "EdgeListParseError",
    "EdgeSplit",
    "EvalConfig",
    "EvalReport",
    "Graph",
    "IndexFormatError",
    "IndexStats",
    "JaccardCoefficient",
    "KdistError",
    "PREDICTOR_NAMES",
    "PredictorResult",
    "PreferentialAttachment",
    "SENTINEL",
    "TopKDistanceIndex",
    "TopKIndex",
    "TopKSimilarity",
    "VertexOrder",
    "auroc",
    "build_index",
    "compute_loop_label",
    "count_paths_within",
    "degree_order",
    "deserialize_index",
    "index_stats",
    "load_edge_list",
    "make_predictor",
    "parse_edge_list",
    "parse_predictor",
    "query",
    "query_by_id",
    "relabel",
    "remove_edges",
    "restricted_topk_loops",
    "run_experiment",
    "sample_negatives",
    "score_adamic_adar",
    "score_common_neighbors",
    "score_jaccard",
    "score_preferential_attachment",
    "score_topk",
    "serialize_index",
    "split_edges",
    "top1_distance",
    "topk_walk_lengths",
    "write_edge_list",
    "__version__",
]
