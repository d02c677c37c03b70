"""Team recommendation engine over competence, social and history graphs."""

from swat.corpus import cross_validate_history, parse_corpus, serialize_corpus
from swat.index import ConceptIndex
from swat.metrics import (
    competence_score,
    social_cohesiveness,
    team_concept_repetition,
    team_user_repetition,
)
from swat.model import (
    DEFAULT_HORIZON,
    GraphSnapshot,
    build_snapshot,
    ego_network,
    pairwise_hop_distances,
    shortest_social_distance,
)
from swat.stats import CorpusStats, compute_stats
from swat.synth import SynthParams, generate_synthetic
from swat.teams import (
    MetricWeights,
    ScoreCard,
    enumerate_candidates,
    rank_candidates,
    score_team,
)

__version__ = "0.1.0"

__all__ = [
    "ConceptIndex",
    "CorpusStats",
    "DEFAULT_HORIZON",
    "GraphSnapshot",
    "MetricWeights",
    "ScoreCard",
    "SynthParams",
    "build_snapshot",
    "competence_score",
    "compute_stats",
    "cross_validate_history",
    "ego_network",
    "enumerate_candidates",
    "generate_synthetic",
    "pairwise_hop_distances",
    "parse_corpus",
    "rank_candidates",
    "score_team",
    "serialize_corpus",
    "shortest_social_distance",
    "social_cohesiveness",
    "team_concept_repetition",
    "team_user_repetition",
]
