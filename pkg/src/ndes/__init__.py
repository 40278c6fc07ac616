"""Neighborhood-density edge similarity, baseline local measures and community evaluation."""

from .community import DetectorParams, detect, resolve_auto_threshold
from .graph import (
    EmptyGraphError,
    Graph,
    GraphFormatError,
    Partition,
    common_neighbors,
    load_edge_list,
    load_ground_truth,
    neighbors,
    read_edge_list,
)
from .metrics import (
    EvalReport,
    ari,
    conductance,
    cut_ratio,
    evaluate,
    expansion,
    modularity,
    nf1,
    nmi,
)
from .similarity import (
    EdgeScores,
    MeasureId,
    NodeInfo,
    NotAnEdgeError,
    adamic_adar,
    common_neighbors_count,
    information,
    jaccard,
    ndes,
    preferential_attachment,
    resource_allocation,
    rho,
    rho_oracle,
    rho_scores,
    salton,
    score_all_edges,
)

__version__ = "0.1.0"
