"""scikit-learn style wrappers around the scoring pipeline.

``X`` is a bipartite edge list: a :class:`BipartiteGraph`, an ``(n, 2)``
array-like of ``(mode_a_label, mode_b_label)`` rows, or any iterable of pairs.
``fit`` learns scores for the nodes of the scored mode; ``transform`` looks
those scores up for a list of labels.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .ablation import AblationReport, run_ablation
from .community import find_communities
from .exceptions import InputError
from .graph import BipartiteGraph, Mode, build_bipartite, project
from .scoring import CENTRALITIES, Measure, ScoreTable, hh_scores, top_k


def check_bipartite(X) -> BipartiteGraph:
    """Coerce ``X`` into a :class:`BipartiteGraph`."""
    if isinstance(X, BipartiteGraph):
        return X
    if hasattr(X, "to_numpy"):
        X = X.to_numpy()
    if isinstance(X, np.ndarray):
        if X.ndim != 2 or X.shape[1] != 2:
            raise InputError(f"expected an (n, 2) edge array, got shape {X.shape}")
        X = X.tolist()
    return build_bipartite(X)


def check_params(min_size, onto) -> Mode:
    if not isinstance(min_size, (int, np.integer)) or min_size < 2:
        raise InputError(f"min_size must be an integer >= 2, got {min_size!r}")
    return Mode.parse(onto)


class _ScorerBase(TransformerMixin, BaseEstimator, auto_wrap_output_keys=None):
    def _set_scores(self, graph: BipartiteGraph, table: ScoreTable):
        self.graph_ = graph
        self.scores_ = table
        self.nodes_ = np.array([n.label for n in table.nodes()], dtype=object)
        self.raw_scores_ = np.array([table.raw(n) for n in table.nodes()])
        self.normalized_scores_ = np.array([table.normalized(n) for n in table.nodes()])

    def transform(self, X=None):
        """Scores for the labels in ``X`` (all scored nodes when ``X`` is None).

        Returns an ``(n, 2)`` array of raw and normalized values.
        """
        check_is_fitted(self, "scores_")
        if X is None:
            return np.column_stack([self.raw_scores_, self.normalized_scores_])
        table = self.scores_.by_label()
        try:
            rows = [table[str(label)] for label in np.ravel(X)]
        except KeyError as exc:
            raise InputError(f"unknown node label {exc.args[0]!r}") from None
        return np.array([[s.raw, s.normalized] for s in rows]).reshape(-1, 2)

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).transform()

    def top(self, fraction: float = 0.1, direction: str = "top") -> list[str]:
        check_is_fitted(self, "scores_")
        return [n.label for n in top_k(self.scores_, fraction, direction)]

    def ablate(self, fraction: float = 0.1, direction: str = "top",
               min_size: int | None = None) -> AblationReport:
        """Remove the top/bottom scored nodes from the fitted graph."""
        check_is_fitted(self, "scores_")
        size = min_size if min_size is not None else getattr(self, "min_size", 3)
        return run_ablation(self.graph_, self.scores_, fraction, direction, size)


class HHScorer(_ScorerBase):
    """H.H influence of each node of the mode opposite ``onto``.

    Parameters
    ----------
    min_size : int, default=3
        Smallest maximal clique of the projection counted as a community.
    onto : {'a', 'b'}, default='a'
        Mode the bipartite graph is projected onto.

    Attributes
    ----------
    projection_ : ProjectedGraph
    communities_ : CommunitySet
    breakdown_ : dict
        Per-node :class:`EffectBreakdown`.
    scores_ : ScoreTable
    """

    def __init__(self, min_size=3, onto="a"):
        self.min_size = min_size
        self.onto = onto

    def fit(self, X, y=None):
        onto = check_params(self.min_size, self.onto)
        g = check_bipartite(X)
        self.projection_ = project(g, onto)
        self.communities_ = find_communities(self.projection_, self.min_size)
        table, self.breakdown_ = hh_scores(g, self.projection_, self.communities_)
        self._set_scores(g, table)
        return self


class CentralityScorer(_ScorerBase):
    """One of the classical centralities on the full bipartite graph.

    Scores are reported for the mode opposite ``onto``, to line up with
    :class:`HHScorer`.
    """

    def __init__(self, measure="degree", onto="a", min_size=3):
        self.measure = measure
        self.onto = onto
        self.min_size = min_size

    def fit(self, X, y=None):
        onto = check_params(self.min_size, self.onto)
        measure = Measure.parse(self.measure)
        if measure not in CENTRALITIES:
            raise InputError(f"{measure.value!r} is not a centrality; use HHScorer")
        g = check_bipartite(X)
        self._set_scores(g, CENTRALITIES[measure](g, onto.other))
        return self
