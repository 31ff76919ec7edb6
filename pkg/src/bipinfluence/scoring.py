"""H.H influence score and the classical centralities it is compared with.

Centralities are computed on the full bipartite graph and reported for the
nodes of one mode (``target_mode``), so they line up with H.H scores of the
same nodes.
"""
from __future__ import annotations

import enum
import math
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .community import Community, CommunitySet, community_edges, find_communities
from .exceptions import InputError
from .graph import BipartiteGraph, Mode, NodeId, ProjectedGraph, project


class Measure(str, enum.Enum):
    HH = "hh"
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    EIGENVECTOR = "eigenvector"

    @property
    def title(self) -> str:
        return "HH" if self is Measure.HH else self.value.capitalize()

    @classmethod
    def parse(cls, value) -> "Measure":
        if isinstance(value, Measure):
            return value
        v = str(value).lower().replace(".", "")
        try:
            return cls(v)
        except ValueError:
            raise InputError(f"unknown measure {value!r}") from None


@dataclass(frozen=True)
class Score:
    raw: float
    normalized: float


@dataclass(frozen=True)
class ScoreTable:
    """Raw and min-max normalized values of one measure for one mode."""

    measure: Measure
    target_mode: Mode
    entries: Mapping[NodeId, Score]

    @classmethod
    def from_raw(cls, measure, target_mode, raw: Mapping[NodeId, float]) -> "ScoreTable":
        return normalize(cls(Measure.parse(measure), Mode.parse(target_mode),
                             {n: Score(float(v), float("nan")) for n, v in raw.items()}))

    def raw(self, node: NodeId) -> float:
        return self.entries[node].raw

    def normalized(self, node: NodeId) -> float:
        return self.entries[node].normalized

    def nodes(self) -> list[NodeId]:
        return sorted(self.entries, key=lambda n: n.label)

    def by_label(self) -> dict[str, Score]:
        return {n.label: s for n, s in self.entries.items()}

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class EffectBreakdown:
    event: NodeId
    per_community: Mapping[Community, float] = field(default_factory=dict)
    total: float = 0.0


def event_effect(event: NodeId, c: Community, p: ProjectedGraph) -> float:
    """Credit ``event`` earns for the edges of ``c``.

    Each community edge carries a total credit of 1, split evenly between
    the events that create it.
    """
    if event.mode is p.mode:
        raise InputError(f"{event!r} is in the projected mode, not an event")
    effect = 0.0
    for e in community_edges(c, p):
        prov = p.edges[e]
        if event in prov:
            effect += 1.0 / len(prov)
    return effect


def _community_effects(c: Community, p: ProjectedGraph) -> dict[NodeId, float]:
    effects: dict[NodeId, float] = {}
    for e in community_edges(c, p):
        prov = p.edges[e]
        share = 1.0 / len(prov)
        for ev in prov:
            effects[ev] = effects.get(ev, 0.0) + share
    return effects


def hh_scores(g: BipartiteGraph, p: ProjectedGraph, cs: CommunitySet
              ) -> tuple[ScoreTable, dict[NodeId, EffectBreakdown]]:
    """H.H score of every node of the mode opposite to the projection.

    Returns the score table and, per event, its effect in each community.
    A community's contribution is weighted by its node count.
    """
    events = g.nodes_of(p.mode.other)
    per: dict[NodeId, dict[Community, float]] = {ev: {} for ev in events}
    for c in cs:
        for ev, eff in _community_effects(c, p).items():
            if ev not in per:
                raise InputError(f"{ev!r} is not a node of the bipartite graph")
            per[ev][c] = eff
    raw = {}
    breakdown = {}
    for ev in events:
        total = math.fsum(c.size * eff for c, eff in per[ev].items())
        raw[ev] = total
        breakdown[ev] = EffectBreakdown(ev, per[ev], total)
    return ScoreTable.from_raw(Measure.HH, p.mode.other, raw), breakdown


def degree_centrality(g: BipartiteGraph, target_mode) -> ScoreTable:
    target_mode = Mode.parse(target_mode)
    raw = {n: float(g.degree(n)) for n in g.nodes_of(target_mode)}
    return ScoreTable.from_raw(Measure.DEGREE, target_mode, raw)


def _index_adjacency(g: BipartiteGraph) -> tuple[list[NodeId], list[list[int]]]:
    nodes = list(g.nodes)
    index = {n: i for i, n in enumerate(nodes)}
    adj = [sorted(index[m] for m in g.neighbors(n)) for n in nodes]
    return nodes, adj


def _bfs(adj: Sequence[Sequence[int]], s: int):
    """Distances, shortest-path counts, predecessors and visit order from ``s``."""
    n = len(adj)
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    dist[s] = 0
    sigma[s] = 1
    order = []
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return dist, sigma, preds, order


def betweenness_centrality(g: BipartiteGraph, target_mode) -> ScoreTable:
    """Unnormalized betweenness over unordered pairs (Brandes accumulation)."""
    target_mode = Mode.parse(target_mode)
    nodes, adj = _index_adjacency(g)
    cb = [0.0] * len(nodes)
    for s in range(len(nodes)):
        _, sigma, preds, order = _bfs(adj, s)
        delta = [0.0] * len(nodes)
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                cb[w] += delta[w]
    # every unordered pair was counted from both ends
    raw = {n: cb[i] / 2.0 for i, n in enumerate(nodes) if n.mode is target_mode}
    return ScoreTable.from_raw(Measure.BETWEENNESS, target_mode, raw)


def closeness_centrality(g: BipartiteGraph, target_mode) -> ScoreTable:
    """Inverse total distance to reachable nodes; 0 when nothing is reachable."""
    target_mode = Mode.parse(target_mode)
    nodes, adj = _index_adjacency(g)
    raw = {}
    for i, n in enumerate(nodes):
        if n.mode is not target_mode:
            continue
        dist, *_ = _bfs(adj, i)
        total = sum(d for d in dist if d > 0)
        raw[n] = 1.0 / total if total else 0.0
    return ScoreTable.from_raw(Measure.CLOSENESS, target_mode, raw)


def eigenvector_centrality(g: BipartiteGraph, target_mode, tol: float = 1e-10,
                           max_iter: int = 1000) -> ScoreTable:
    """Dominant eigenvector of the bipartite adjacency, by power iteration.

    Iterates with ``A + I``: a bipartite spectrum is symmetric, so plain
    iteration on ``A`` oscillates between the ``+λ`` and ``-λ`` vectors.
    """
    target_mode = Mode.parse(target_mode)
    if g.n_edges == 0:
        raise InputError("eigenvector undefined: graph has no edges")
    nodes, adj = _index_adjacency(g)
    rows = np.repeat(np.arange(len(nodes)), [len(a) for a in adj])
    cols = np.fromiter((j for a in adj for j in a), dtype=np.intp, count=len(rows))
    x = np.full(len(nodes), 1.0 / math.sqrt(len(nodes)))
    for _ in range(max_iter):
        y = x.copy()
        np.add.at(y, rows, x[cols])
        y /= np.linalg.norm(y)
        done = np.abs(y - x).sum() < len(nodes) * tol
        x = y
        if done:
            break
    else:
        warnings.warn(f"eigenvector centrality did not converge in {max_iter} iterations",
                      RuntimeWarning, stacklevel=2)
    x = np.clip(x, 0.0, None)
    raw = {n: float(x[i]) for i, n in enumerate(nodes) if n.mode is target_mode}
    return ScoreTable.from_raw(Measure.EIGENVECTOR, target_mode, raw)


def normalize(t: ScoreTable) -> ScoreTable:
    """Min-max rescale raw values to [0, 1]; an all-equal table maps to 0."""
    if not t.entries:
        raise InputError("cannot normalize an empty score table")
    lo = min(s.raw for s in t.entries.values())
    hi = max(s.raw for s in t.entries.values())
    span = hi - lo
    entries = {n: Score(s.raw, (s.raw - lo) / span if span > 0 else 0.0)
               for n, s in t.entries.items()}
    return ScoreTable(t.measure, t.target_mode, entries)


def r_squared(x: Sequence[float], y: Sequence[float]) -> float:
    """Coefficient of determination of the least-squares line through (x, y).

    0 when either vector is constant (no linear relation can be fitted).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(x) != len(y):
        raise InputError("vectors differ in length")
    if len(x) < 2:
        raise InputError("need at least 2 nodes to compare measures")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx, syy = float(dx @ dx), float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return 0.0
    sxy = float(dx @ dy)
    return min(1.0, sxy * sxy / (sxx * syy))


def compare_measures(tables: Sequence[ScoreTable]) -> tuple[list[Measure], np.ndarray]:
    """Pairwise R² between normalized score vectors; unit diagonal."""
    tables = list(tables)
    if not tables:
        raise InputError("no score tables to compare")
    nodes = tables[0].nodes()
    if len(nodes) < 2:
        raise InputError("need at least 2 nodes to compare measures")
    for t in tables[1:]:
        if set(t.entries) != set(nodes):
            raise InputError(f"{t.measure.title} table covers a different node set")
    vectors = [[t.normalized(n) for n in nodes] for t in tables]
    m = np.eye(len(tables))
    for i in range(len(tables)):
        for j in range(i + 1, len(tables)):
            m[i, j] = m[j, i] = r_squared(vectors[i], vectors[j])
    return [t.measure for t in tables], m


def top_k(t: ScoreTable, fraction: float, direction: str = "top") -> list[NodeId]:
    """The ``floor(fraction * n)`` highest (or lowest) scoring nodes, at least one.

    Ties are broken by ascending node label.
    """
    if not t.entries:
        raise InputError("empty score table")
    if not 0 < fraction <= 1:
        raise InputError(f"fraction must be in (0, 1], got {fraction}")
    if direction not in ("top", "bottom"):
        raise InputError(f"direction must be 'top' or 'bottom', got {direction!r}")
    k = max(1, math.floor(fraction * len(t.entries) + 1e-9))
    sign = -1.0 if direction == "top" else 1.0
    ranked = sorted(t.entries, key=lambda n: (sign * t.entries[n].raw, n.label))
    return ranked[:k]


def score_all(g: BipartiteGraph, onto, min_size: int = 3,
              measures: Iterable = tuple(Measure)) -> dict[Measure, ScoreTable]:
    """Convenience: every requested measure for the mode opposite ``onto``."""
    onto = Mode.parse(onto)
    target = onto.other
    out = {}
    for m in map(Measure.parse, measures):
        if m is Measure.HH:
            p = project(g, onto)
            out[m] = hh_scores(g, p, find_communities(p, min_size))[0]
        else:
            out[m] = CENTRALITIES[m](g, target)
    return out


CENTRALITIES = {
    Measure.DEGREE: degree_centrality,
    Measure.BETWEENNESS: betweenness_centrality,
    Measure.CLOSENESS: closeness_centrality,
    Measure.EIGENVECTOR: eigenvector_centrality,
}
