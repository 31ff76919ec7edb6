"""Slow, obviously-correct reference implementations used only by tests.

None of these reuse the package's projection, clique or centrality code.
"""
from __future__ import annotations

import itertools
import os
import random
from fractions import Fraction
from pathlib import Path

import numpy as np

from bipinfluence import BipartiteGraph, build_bipartite

# Published Southern Women H.H values: event -> (raw, normalized), 4 decimals truncated
SW_REFERENCE = {
    "E1": (13.5, 0.0), "E2": (14.7142, 0.0010), "E3": (75.2142, 0.0532),
    "E4": (24.7142, 0.0096), "E5": (189.2976, 0.1515), "E6": (256.9642, 0.2099),
    "E8": (1173.1309, 1.0), "E9": (838.1476, 0.7111), "E7": (492.75, 0.4132),
    "E12": (134.2666, 0.1041), "E10": (78.9333, 0.0564), "E13": (16.9333, 0.0029),
    "E14": (16.9333, 0.0029), "E11": (55.5, 0.0362),
}


def random_bipartite(rng: random.Random, max_total: int = 12, max_side: int = 8,
                     connected: bool = False) -> BipartiteGraph:
    """Random simple bipartite graph with |A| + |B| <= max_total, at least one edge."""
    while True:
        na = rng.randint(1, min(max_side, max_total - 1))
        nb = rng.randint(1, min(max_side, max_total - na))
        p = rng.uniform(0.15, 0.9)
        edges = [(f"a{i}", f"b{j}") for i in range(na) for j in range(nb) if rng.random() < p]
        if not edges:
            continue
        g = build_bipartite(edges, nodes_a=[f"a{i}" for i in range(na)],
                            nodes_b=[f"b{j}" for j in range(nb)])
        if connected and not is_connected(g):
            continue
        return g


def adjacency_sets(g: BipartiteGraph) -> dict:
    return {n: set(g.neighbors(n)) for n in g.nodes}


def is_connected(g: BipartiteGraph) -> bool:
    adj = adjacency_sets(g)
    start = next(iter(adj))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(adj)


def brute_projection(g: BipartiteGraph, mode) -> dict:
    """Pairwise neighbour-set intersection over every pair of same-mode nodes."""
    nodes = g.nodes_of(mode)
    out = {}
    for x, y in itertools.combinations(nodes, 2):
        shared = set(g.neighbors(x)) & set(g.neighbors(y))
        if shared:
            out[frozenset((x, y))] = frozenset(shared)
    return out


def brute_maximal_cliques(nodes, edges: set, min_size: int) -> set:
    """Test every subset for being a clique that no outside node extends."""
    nodes = list(nodes)

    def adjacent(u, v):
        return frozenset((u, v)) in edges

    result = set()
    for r in range(1, len(nodes) + 1):
        for subset in itertools.combinations(nodes, r):
            if not all(adjacent(u, v) for u, v in itertools.combinations(subset, 2)):
                continue
            if any(all(adjacent(o, u) for u in subset) for o in nodes if o not in subset):
                continue
            if r >= min_size:
                result.add(frozenset(subset))
    return result


def brute_hh(g: BipartiteGraph, mode, cliques) -> dict:
    """Exact H.H for every node of the other mode, recomputing w from scratch."""
    scored = g.nodes_of("b" if str(getattr(mode, "value", mode)) == "a" else "a")
    hh = {e: Fraction(0) for e in scored}
    for clique in cliques:
        k = len(clique)
        for x, y in itertools.combinations(clique, 2):
            shared = set(g.neighbors(x)) & set(g.neighbors(y))
            for e in shared:
                hh[e] += Fraction(k, len(shared))
    return hh


def _all_shortest_paths(adj, s, t):
    """Enumerate every shortest s-t path by iterative deepening DFS."""
    for depth in range(len(adj)):
        found = []

        def dfs(path):
            v = path[-1]
            if len(path) - 1 == depth:
                if v == t:
                    found.append(tuple(path))
                return
            for w in adj[v]:
                if w not in path:
                    path.append(w)
                    dfs(path)
                    path.pop()

        dfs([s])
        if found:
            return found
    return []


def brute_betweenness(g: BipartiteGraph) -> dict:
    adj = {n: sorted(g.neighbors(n)) for n in g.nodes}
    score = {n: Fraction(0) for n in g.nodes}
    for s, t in itertools.combinations(g.nodes, 2):
        paths = _all_shortest_paths(adj, s, t)
        if not paths:
            continue
        for x in g.nodes:
            if x in (s, t):
                continue
            through = sum(1 for p in paths if x in p)
            score[x] += Fraction(through, len(paths))
    return score


def floyd_warshall(g: BipartiteGraph):
    nodes = list(g.nodes)
    idx = {n: i for i, n in enumerate(nodes)}
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(len(nodes))] for i in range(len(nodes))]
    for a, b in g.edges():
        d[idx[a]][idx[b]] = d[idx[b]][idx[a]] = 1
    for k in range(len(nodes)):
        for i in range(len(nodes)):
            for j in range(len(nodes)):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return nodes, d


def brute_closeness(g: BipartiteGraph) -> dict:
    nodes, d = floyd_warshall(g)
    out = {}
    for i, n in enumerate(nodes):
        total = sum(x for x in d[i] if x != float("inf"))
        out[n] = Fraction(1, int(total)) if total else Fraction(0)
    return out


def dense_eigenvector(g: BipartiteGraph):
    """Dominant eigenvector via a dense symmetric eigensolver.

    Returns (vector dict, spectral gap between the two largest eigenvalues).
    """
    nodes = list(g.nodes)
    idx = {n: i for i, n in enumerate(nodes)}
    a = np.zeros((len(nodes), len(nodes)))
    for u, v in g.edges():
        a[idx[u], idx[v]] = a[idx[v], idx[u]] = 1.0
    vals, vecs = np.linalg.eigh(a)
    v = np.abs(vecs[:, -1])
    v /= np.linalg.norm(v)
    gap = vals[-1] - vals[-2] if len(vals) > 1 else np.inf
    return {n: v[i] for i, n in enumerate(nodes)}, gap


def person_crime_path():
    """Location of a user-supplied KONECT Person-Crime file, if any."""
    candidates = [os.environ.get("BIPINFLUENCE_PERSON_CRIME", ""),
                  Path(__file__).parent / "data" / "out.moreno_crime_crime"]
    for c in candidates:
        if c and Path(c).is_file():
            return Path(c)
    return None
