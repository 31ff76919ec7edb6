"""Embedded example data."""
from __future__ import annotations

from .graph import BipartiteGraph, build_bipartite

# Davis Southern Women attendance, 89-edge variant.  Row i is woman Wi,
# column j is event Ej.
SOUTHERN_WOMEN = (
    "11111101100000",  # W1 Evelyn Jefferson
    "11101111000000",  # W2 Laura Mandeville
    "01111111100000",  # W3 Theresa Anderson
    "10111111000000",  # W4 Brenda Rogers
    "00111010000000",  # W5 Charlotte McDowd
    "00101101000000",  # W6 Frances Anderson
    "00001111000000",  # W7 Eleanor Nye
    "00000101100000",  # W8 Pearl Oglethorpe
    "00001011100000",  # W9 Ruth DeSand
    "00000011100100",  # W10 Verne Sanderson
    "00000001110100",  # W11 Myra Liddel
    "00000001110111",  # W12 Katherina Rogers
    "00000011110111",  # W13 Sylvia Avondale
    "00000110111111",  # W14 Nora Fayette
    "00000011011100",  # W15 Helen Lloyd
    "00000001100000",  # W16 Dorothy Murchison
    "00000000101000",  # W17 Olivia Carleton
    "00000000101000",  # W18 Flora Price
)


def builtin_southern_women() -> BipartiteGraph:
    """Women W1..W18 (mode A) attending events E1..E14 (mode B)."""
    women = [f"W{i + 1}" for i in range(len(SOUTHERN_WOMEN))]
    events = [f"E{j + 1}" for j in range(len(SOUTHERN_WOMEN[0]))]
    edges = [(women[i], events[j])
             for i, row in enumerate(SOUTHERN_WOMEN)
             for j, flag in enumerate(row) if flag == "1"]
    return build_bipartite(edges, nodes_a=women, nodes_b=events)


BUILTINS = {"southern-women": builtin_southern_women}
