import itertools
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from tribreak.graph import Graph

CORPUS = {
    "K3": (nx.complete_graph(3), 1),
    "K4": (nx.complete_graph(4), 4),
    "K5": (nx.complete_graph(5), 10),
    "petersen": (nx.petersen_graph(), 0),
    "bowtie": (nx.Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]), 2),
    "K33": (nx.complete_bipartite_graph(3, 3), 0),
}


def from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edges(list(h.edges()), nodes=list(h.nodes()))


def random_nx(rng: random.Random, n_max=30, p=None, connected=False) -> nx.Graph:
    while True:
        n = rng.randint(1, n_max)
        prob = rng.uniform(0.05, 0.7) if p is None else p
        h = nx.gnp_random_graph(n, prob, seed=rng.randrange(2**31))
        # scramble ids so internal and original labels differ
        ids = rng.sample(range(10 * n + 10), n)
        h = nx.relabel_nodes(h, dict(zip(range(n), ids)))
        if not connected or nx.is_connected(h):
            return h


def brute_triangles(h: nx.Graph):
    """Triangles as sorted triples of original ids, by checking all triples."""
    out = []
    for a, b, c in itertools.combinations(sorted(h.nodes()), 3):
        if h.has_edge(a, b) and h.has_edge(b, c) and h.has_edge(a, c):
            out.append((a, b, c))
    return out


@st.composite
def small_graphs(draw, n_max=14):
    n = draw(st.integers(1, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(chosen)
    return h
