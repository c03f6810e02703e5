"""Co-citation networks and structural variation scoring."""

from ._core import (
    ConfigError,
    CoCitationNetwork,
    Corpus,
    DataError,
    NovelLinkReport,
    PaperRecord,
    Partition,
    PseudopaperSpec,
    SmoothingConfig,
    SvaScores,
    WindowConfig,
    augment,
    betweenness,
    build_cocitation,
    entropy,
    harmonic,
    louvain,
    modularity,
    score_cohort,
    score_pseudopaper,
    select_nodes,
    synthesize,
)

__all__ = [
    "ConfigError",
    "CoCitationNetwork",
    "Corpus",
    "DataError",
    "NovelLinkReport",
    "PaperRecord",
    "Partition",
    "PseudopaperSpec",
    "SmoothingConfig",
    "SvaScores",
    "WindowConfig",
    "augment",
    "betweenness",
    "build_cocitation",
    "entropy",
    "harmonic",
    "louvain",
    "modularity",
    "score_cohort",
    "score_pseudopaper",
    "select_nodes",
    "synthesize",
]
