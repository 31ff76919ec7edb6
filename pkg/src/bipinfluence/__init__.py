"""Influence of one mode of a bipartite network on community formation in
the other mode's one-mode projection."""
from .ablation import (AblationReport, AnomalyType, Side, classify_changes,
                       remove_events, run_ablation)
from .community import Community, CommunitySet, community_edges, find_communities
from .datasets import builtin_southern_women
from .estimators import CentralityScorer, HHScorer
from .exceptions import BipInfluenceError, InputError, InvariantError
from .graph import (BipartiteGraph, Mode, NodeId, ProjectedGraph, build_bipartite,
                    edge_multiplicity, neighbors, project)
from .io import Report, emit_report, parse_konect, parse_tsv
from .scoring import (EffectBreakdown, Measure, ScoreTable, betweenness_centrality,
                      closeness_centrality, compare_measures, degree_centrality,
                      eigenvector_centrality, event_effect, hh_scores, normalize,
                      score_all, top_k)

__version__ = "0.1.0"

__all__ = [
    "AblationReport", "AnomalyType", "BipInfluenceError", "BipartiteGraph",
    "CentralityScorer", "Community", "CommunitySet", "EffectBreakdown", "HHScorer",
    "InputError", "InvariantError", "Measure", "Mode", "NodeId", "ProjectedGraph",
    "Report", "ScoreTable", "Side", "betweenness_centrality", "build_bipartite",
    "builtin_southern_women", "classify_changes", "closeness_centrality",
    "community_edges", "compare_measures", "degree_centrality", "edge_multiplicity",
    "eigenvector_centrality", "emit_report", "event_effect", "find_communities",
    "hh_scores", "neighbors", "normalize", "parse_konect", "parse_tsv", "project",
    "remove_events", "run_ablation", "score_all", "top_k",
]
