"""Remove scored nodes, re-detect communities, and classify what changed.

Before/after communities are linked when they share at least two members
(i.e. at least one projected edge).  Links are accepted greedily by
decreasing overlap so that every linked group is a star: one-to-one,
one-to-many (split) or many-to-one (merge).  Labels then follow from the
shape of each star and the sizes involved.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .community import Community, CommunitySet, find_communities
from .exceptions import InputError
from .graph import BipartiteGraph, Mode, NodeId, project
from .scoring import ScoreTable, top_k


class AnomalyType(str, enum.Enum):
    BORN = "born"
    VANISH = "vanish"
    GROW = "grow"
    MERGE = "merge"
    SPLIT = "split"
    SHRINK = "shrink"
    UNCHANGED = "unchanged"


class Side(str, enum.Enum):
    BEFORE = "before"
    AFTER = "after"


@dataclass(frozen=True)
class AblationReport:
    removed: tuple[NodeId, ...]
    before: CommunitySet
    after: CommunitySet
    labels: Mapping[tuple[Community, Side], AnomalyType]
    counts: Mapping[AnomalyType, int]
    change_rate: float
    measure: str = ""
    direction: str = ""
    fraction: float = 0.0

    @property
    def n_changed(self) -> int:
        return sum(v for k, v in self.counts.items()
                   if k not in (AnomalyType.UNCHANGED, AnomalyType.BORN))

    def label(self, c: Community, side=Side.BEFORE) -> AnomalyType:
        return self.labels[(c, Side(side))]


def remove_events(g: BipartiteGraph, victims: Iterable[NodeId],
                  mode=Mode.B) -> BipartiteGraph:
    """Copy of ``g`` without ``victims`` and their edges.

    Nodes of the other mode stay, even when left isolated.
    """
    mode = Mode.parse(mode)
    victims = set(victims)
    for v in victims:
        if v.mode is not mode or v not in g:
            raise InputError(f"{v!r} is not a mode-{mode.value} node of the graph")
    keep = [n for n in g.nodes_of(mode) if n not in victims]
    edges = [(a, b) for a, b in g.edges() if a not in victims and b not in victims]
    if mode is Mode.B:
        return BipartiteGraph(g.nodes_a, keep, edges)
    return BipartiteGraph(keep, g.nodes_b, edges)


def _greedy_links(before: CommunitySet, after: CommunitySet):
    candidates = []
    for i, b in enumerate(before):
        for j, a in enumerate(after):
            overlap = len(b.members & a.members)
            if overlap >= 2:
                candidates.append((-overlap, b.labels, a.labels, i, j))
    candidates.sort()
    best_for_b: dict[int, int] = {}
    best_for_a: dict[int, int] = {}
    for _, _, _, i, j in candidates:
        best_for_b.setdefault(i, j)
        best_for_a.setdefault(j, i)

    b_links: dict[int, set[int]] = {}
    a_links: dict[int, set[int]] = {}
    for _, _, _, i, j in candidates:
        bi, aj = b_links.get(i, set()), a_links.get(j, set())
        if bi and aj:
            continue
        if aj:
            # i would merge into j: j must be the best match for i, j's current
            # partners must not be split hubs, and j must not lie inside any
            # single parent (then it is just that parent's remnant)
            parents = aj | {i}
            if (best_for_b[i] != j or any(len(b_links[k]) > 1 for k in aj)
                    or any(after[j].members <= before[k].members for k in parents)):
                continue
        elif bi:
            # j would become another piece of i (split), mirror conditions
            children = bi | {j}
            if (best_for_a[j] != i or any(len(a_links[k]) > 1 for k in bi)
                    or any(before[i].members <= after[k].members for k in children)):
                continue
        b_links.setdefault(i, set()).add(j)
        a_links.setdefault(j, set()).add(i)
    return b_links, a_links


def classify_changes(before: CommunitySet, after: CommunitySet
                     ) -> tuple[dict[tuple[Community, Side], AnomalyType],
                                dict[AnomalyType, int]]:
    """Label every before- and after-community.

    ``counts`` tallies one event per before-community, plus one per born
    after-community.
    """
    b_links, a_links = _greedy_links(before, after)
    labels: dict[tuple[Community, Side], AnomalyType] = {}
    for i, b in enumerate(before):
        partners = b_links.get(i, set())
        if not partners:
            kind = AnomalyType.VANISH
        elif len(partners) > 1:
            kind = AnomalyType.SPLIT
        else:
            (j,) = partners
            if len(a_links[j]) > 1:
                kind = AnomalyType.MERGE
            else:
                kind = _compare_pair(b, after[j])
        labels[(b, Side.BEFORE)] = kind
    for j, a in enumerate(after):
        partners = a_links.get(j, set())
        if not partners:
            kind = AnomalyType.BORN
        elif len(partners) > 1:
            kind = AnomalyType.MERGE
        else:
            (i,) = partners
            kind = labels[(before[i], Side.BEFORE)]
        labels[(a, Side.AFTER)] = kind

    counts = {t: 0 for t in AnomalyType}
    for (_, side), kind in labels.items():
        if side is Side.BEFORE or kind is AnomalyType.BORN:
            counts[kind] += 1
    return labels, counts


def _compare_pair(b: Community, a: Community) -> AnomalyType:
    if a.members == b.members:
        return AnomalyType.UNCHANGED
    if a.members > b.members or a.size > b.size:
        return AnomalyType.GROW
    # strict subset, smaller, or same size with lost members
    return AnomalyType.SHRINK


def change_rate(labels: Mapping[tuple[Community, Side], AnomalyType], n_before: int) -> float:
    if n_before == 0:
        return 0.0
    changed = sum(1 for (_, side), kind in labels.items()
                  if side is Side.BEFORE and kind is not AnomalyType.UNCHANGED)
    return changed / n_before


def run_ablation(g: BipartiteGraph, measure: ScoreTable, fraction: float = 0.10,
                 direction: str = "top", min_size: int = 3) -> AblationReport:
    """Remove the top/bottom ``fraction`` of scored nodes and compare communities.

    The projection is taken onto the mode opposite the scored one.
    """
    scored = measure.target_mode
    for n in measure.entries:
        if n not in g:
            raise InputError(f"scored node {n!r} is not in the graph")
    onto = scored.other
    victims = top_k(measure, fraction, direction)
    before = find_communities(project(g, onto), min_size)
    after = find_communities(project(remove_events(g, victims, scored), onto), min_size)
    labels, counts = classify_changes(before, after)
    return AblationReport(
        removed=tuple(victims), before=before, after=after, labels=labels,
        counts=counts, change_rate=change_rate(labels, len(before)),
        measure=measure.measure.value, direction=direction, fraction=fraction,
    )
