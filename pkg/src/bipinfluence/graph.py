"""Bipartite graphs and their one-mode projections.

Every projected edge keeps the set of opposite-mode nodes that created it
(its *provenance*).  The size of that set is the edge multiplicity used when
crediting events for community edges.
"""
from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .exceptions import InputError, InvariantError


class Mode(str, enum.Enum):
    A = "a"
    B = "b"

    @property
    def other(self) -> "Mode":
        return Mode.B if self is Mode.A else Mode.A

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, Mode):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InputError(f"unknown mode {value!r}; expected 'a' or 'b'") from None


@dataclass(frozen=True, order=True)
class NodeId:
    """A node label tagged with its mode.

    The same label in both modes denotes two different nodes.
    """

    label: str
    mode: Mode

    def __str__(self) -> str:
        return self.label


class BipartiteGraph:
    """Immutable two-mode graph.

    Node order is first-appearance order of the input, which keeps every
    downstream output deterministic for a fixed input file.
    """

    def __init__(self, nodes_a: Sequence[NodeId], nodes_b: Sequence[NodeId],
                 edges: Iterable[tuple[NodeId, NodeId]]):
        self._nodes = {Mode.A: tuple(nodes_a), Mode.B: tuple(nodes_b)}
        self._adj: dict[NodeId, set[NodeId]] = {n: set() for n in self.nodes}
        if len(self._adj) != len(nodes_a) + len(nodes_b):
            raise InvariantError("duplicate node in bipartite graph")
        for n in nodes_a:
            if n.mode is not Mode.A:
                raise InvariantError(f"{n!r} listed as mode A")
        for n in nodes_b:
            if n.mode is not Mode.B:
                raise InvariantError(f"{n!r} listed as mode B")
        n_edges = 0
        for a, b in edges:
            if a.mode is b.mode:
                raise InvariantError(f"edge {a}-{b} joins two nodes of mode {a.mode.value}")
            if a not in self._adj or b not in self._adj:
                raise InvariantError(f"edge {a}-{b} references an unknown node")
            if b in self._adj[a]:
                raise InvariantError(f"duplicate edge {a}-{b}")
            self._adj[a].add(b)
            self._adj[b].add(a)
            n_edges += 1
        self._n_edges = n_edges

    @property
    def nodes_a(self) -> tuple[NodeId, ...]:
        return self._nodes[Mode.A]

    @property
    def nodes_b(self) -> tuple[NodeId, ...]:
        return self._nodes[Mode.B]

    def nodes_of(self, mode: Mode) -> tuple[NodeId, ...]:
        return self._nodes[Mode.parse(mode)]

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return self._nodes[Mode.A] + self._nodes[Mode.B]

    @property
    def n_edges(self) -> int:
        return self._n_edges

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, node) -> bool:
        return node in self._adj

    def edges(self) -> list[tuple[NodeId, NodeId]]:
        """(a, b) pairs in node order of mode A, then mode B."""
        order = {n: i for i, n in enumerate(self.nodes_b)}
        return [(a, b) for a in self.nodes_a
                for b in sorted(self._adj[a], key=order.__getitem__)]

    def neighbors(self, node: NodeId) -> frozenset[NodeId]:
        try:
            return frozenset(self._adj[node])
        except KeyError:
            raise InputError(f"unknown node {node!r}") from None

    def degree(self, node: NodeId) -> int:
        return len(self.neighbors(node))

    def node(self, label: str, mode) -> NodeId:
        """Look up a node by label, raising InputError if absent."""
        n = NodeId(str(label), Mode.parse(mode))
        if n not in self._adj:
            raise InputError(f"no mode-{n.mode.value} node labelled {label!r}")
        return n

    def adjacency(self) -> Mapping[NodeId, frozenset[NodeId]]:
        return {n: frozenset(nb) for n, nb in self._adj.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (set(self.nodes_a) == set(other.nodes_a)
                and set(self.nodes_b) == set(other.nodes_b)
                and self._adj == other._adj)

    def __repr__(self) -> str:
        return (f"BipartiteGraph(|A|={len(self.nodes_a)}, |B|={len(self.nodes_b)}, "
                f"edges={self.n_edges})")


def build_bipartite(edge_list: Iterable[tuple[object, object]],
                    nodes_a: Iterable[object] = (),
                    nodes_b: Iterable[object] = ()) -> BipartiteGraph:
    """Build a graph from ``(label_a, label_b)`` pairs.

    Labels are converted with ``str``.  ``nodes_a``/``nodes_b`` may list extra
    (possibly isolated) nodes; they are placed before nodes seen in edges.
    Duplicate edges are dropped with a warning.
    """
    seen_a: dict[NodeId, None] = {NodeId(str(x), Mode.A): None for x in nodes_a}
    seen_b: dict[NodeId, None] = {NodeId(str(x), Mode.B): None for x in nodes_b}
    edges: dict[tuple[NodeId, NodeId], None] = {}
    n_dupes = 0
    for item in edge_list:
        try:
            la, lb = item
        except (TypeError, ValueError):
            raise InputError(f"edge must be a (label_a, label_b) pair, got {item!r}") from None
        a, b = NodeId(str(la), Mode.A), NodeId(str(lb), Mode.B)
        seen_a.setdefault(a)
        seen_b.setdefault(b)
        if (a, b) in edges:
            n_dupes += 1
            continue
        edges[(a, b)] = None
    if not edges:
        raise InputError("empty graph")
    if n_dupes:
        warnings.warn(f"dropped {n_dupes} duplicate edge(s)", stacklevel=2)
    return BipartiteGraph(list(seen_a), list(seen_b), edges)


def neighbors(g: BipartiteGraph, n: NodeId) -> frozenset[NodeId]:
    return g.neighbors(n)


@dataclass(frozen=True)
class ProjectedGraph:
    """One-mode projection with per-edge provenance.

    ``edges`` maps an unordered node pair to the non-empty set of
    opposite-mode nodes shared by both endpoints.
    """

    mode: Mode
    nodes: tuple[NodeId, ...]
    edges: Mapping[frozenset, frozenset[NodeId]]
    _adj: Mapping[NodeId, frozenset[NodeId]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: dict[NodeId, set[NodeId]] = {n: set() for n in self.nodes}
        for p, prov in self.edges.items():
            if not prov:
                raise InvariantError(f"projected edge {set(p)} has empty provenance")
            x, y = p
            if x not in adj or y not in adj:
                raise InvariantError(f"projected edge {set(p)} references an unknown node")
            adj[x].add(y)
            adj[y].add(x)
        object.__setattr__(self, "_adj", {n: frozenset(s) for n, s in adj.items()})

    def neighbors(self, node: NodeId) -> frozenset[NodeId]:
        try:
            return self._adj[node]
        except KeyError:
            raise InputError(f"unknown node {node!r}") from None

    def has_edge(self, x: NodeId, y: NodeId) -> bool:
        return x != y and frozenset((x, y)) in self.edges

    def provenance(self, x: NodeId, y: NodeId) -> frozenset[NodeId]:
        try:
            return self.edges[frozenset((x, y))]
        except KeyError:
            raise InputError(f"no projected edge {x}-{y}") from None

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[NodeId, NodeId, frozenset[NodeId]]]:
        order = {n: i for i, n in enumerate(self.nodes)}
        rows = []
        for p, prov in self.edges.items():
            x, y = sorted(p, key=order.__getitem__)
            rows.append((x, y, prov))
        rows.sort(key=lambda r: (order[r[0]], order[r[1]]))
        return rows


def project(g: BipartiteGraph, onto) -> ProjectedGraph:
    """Project ``g`` onto one mode.

    Two nodes of mode ``onto`` are joined iff they share an opposite-mode
    neighbor; the shared neighbors become the edge's provenance.
    """
    onto = Mode.parse(onto)
    prov: dict[frozenset, set[NodeId]] = {}
    order = {n: i for i, n in enumerate(g.nodes_of(onto))}
    for via in g.nodes_of(onto.other):
        members = sorted(g.neighbors(via), key=order.__getitem__)
        for x, y in itertools.combinations(members, 2):
            prov.setdefault(frozenset((x, y)), set()).add(via)
    return ProjectedGraph(onto, g.nodes_of(onto),
                          {p: frozenset(s) for p, s in prov.items()})


def edge_multiplicity(p: ProjectedGraph, x: NodeId, y: NodeId) -> int:
    """Number of opposite-mode nodes that create edge ``x-y``."""
    return len(p.provenance(x, y))
