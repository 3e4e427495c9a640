"""Equality and hierarchical-mobility measures for growing temporal networks."""

__version__ = "0.1.0"

from ._util import TrajectoryWarning
from .edgestream import (
    CorpusEntry,
    EdgeListFormat,
    EdgeStream,
    ParseError,
    RawEdges,
    TemporalEdge,
    canonicalize,
    format_edge_list,
    load_manifest,
    parse_edge_list,
    read_edge_list,
    stream_from_pairs,
)
from .equality import EqualityPoint, equality_trajectory, gini
from .generators import GrowthConfig, generate_ba, generate_fortunato, generate_uniform
from .pca import FeatureMatrix, PcaResult, eigen_symmetric, pca_project, standardize, trails
from .snapshot import (
    CutSpec,
    SnapshotView,
    edge_fraction,
    mean_neighbour_degree,
    normalized_time,
    snapshot,
    snapshots,
)
from .taxonomy import (
    ASPECTS,
    FEATURE_NAMES,
    NodeTrajectory,
    TaxonomyPoint,
    node_trajectories,
    pearson,
    taxonomy_point,
    taxonomy_trajectory,
)
