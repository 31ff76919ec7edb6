"""Communities of a projection, taken as its maximal cliques."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exceptions import InputError, InvariantError
from .graph import NodeId, ProjectedGraph


@dataclass(frozen=True)
class Community:
    members: frozenset[NodeId]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(n.label for n in self.members))

    def sort_key(self):
        return (-self.size, self.labels)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return "Community({" + ", ".join(self.labels) + "})"


class CommunitySet(Sequence[Community]):
    """Immutable, deterministically ordered list of communities.

    Order is size descending, then the sorted member labels.
    """

    def __init__(self, communities=()):
        unique = {c.members: c for c in communities}.values()
        self._items = tuple(sorted(unique, key=Community.sort_key))

    def __getitem__(self, i):
        return self._items[i]

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, CommunitySet):
            return self._items == other._items
        return NotImplemented

    def __hash__(self):
        return hash(self._items)

    def as_sets(self) -> set[frozenset[NodeId]]:
        return {c.members for c in self._items}

    def __repr__(self) -> str:
        return f"CommunitySet({list(self._items)!r})"


def _degeneracy_order(adj: dict[int, set[int]]) -> list[int]:
    # Matula-Beck bucket peeling
    degree = {v: len(nb) for v, nb in adj.items()}
    max_deg = max(degree.values(), default=0)
    buckets: list[set[int]] = [set() for _ in range(max_deg + 1)]
    for v, d in degree.items():
        buckets[d].add(v)
    order: list[int] = []
    removed: set[int] = set()
    d = 0
    for _ in range(len(adj)):
        d = max(d - 1, 0)
        while not buckets[d]:
            d += 1
        v = min(buckets[d])
        buckets[d].remove(v)
        removed.add(v)
        order.append(v)
        for u in adj[v]:
            if u not in removed:
                buckets[degree[u]].remove(u)
                degree[u] -= 1
                buckets[degree[u]].add(u)
    return order


def _bron_kerbosch(adj: dict[int, set[int]], r: list[int], p: set[int],
                   x: set[int]) -> Iterator[list[int]]:
    if not p and not x:
        yield list(r)
        return
    # Tomita pivot: maximize |P ∩ N(u)| over P ∪ X, stopping early once a
    # candidate covers all of P (common inside large cliques)
    pivot, best = None, -1
    for u in itertools.chain(x, p):
        cover = len(p & adj[u])
        if cover > best:
            pivot, best = u, cover
            if cover >= len(p) - (u in p):
                break
    for v in sorted(p - adj[pivot]):
        r.append(v)
        yield from _bron_kerbosch(adj, r, p & adj[v], x & adj[v])
        r.pop()
        p.remove(v)
        x.add(v)


def maximal_cliques(p: ProjectedGraph) -> Iterator[frozenset[NodeId]]:
    """Yield every maximal clique of ``p`` (isolated nodes included)."""
    index = {n: i for i, n in enumerate(p.nodes)}
    adj = {i: {index[m] for m in p.neighbors(n)} for n, i in index.items()}
    order = _degeneracy_order(adj)
    position = {v: k for k, v in enumerate(order)}
    for v in order:
        later = {u for u in adj[v] if position[u] > position[v]}
        earlier = adj[v] - later
        for clique in _bron_kerbosch(adj, [v], later, earlier):
            yield frozenset(p.nodes[i] for i in clique)


def find_communities(p: ProjectedGraph, min_size: int = 3) -> CommunitySet:
    """Maximal cliques of ``p`` with at least ``min_size`` nodes."""
    if min_size < 2:
        raise InputError(f"min_size must be >= 2, got {min_size}")
    return CommunitySet(Community(c) for c in maximal_cliques(p) if len(c) >= min_size)


def community_edges(c: Community, p: ProjectedGraph) -> set[frozenset]:
    """All member pairs of ``c``; each must be an edge of ``p``."""
    pairs = {frozenset(e) for e in itertools.combinations(c.members, 2)}
    for e in pairs:
        if e not in p.edges:
            x, y = sorted(n.label for n in e)
            raise InvariantError(f"community {c!r} has non-adjacent members {x} and {y}")
    return pairs
