import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from tribreak.errors import InfeasibleError, InstanceTooLargeError
from tribreak.oracle import brute_force_min_break, brute_force_opt_edges, brute_force_opt_nodes

from helpers import CORPUS, brute_triangles, from_nx, random_nx, small_graphs


def _reference(h, k, target):
    """Plain enumeration over itertools.combinations; smallest optimal set."""
    tris = brute_triangles(h)
    if target == "node":
        elements = sorted(h.nodes())
        hits = lambda S, t: any(x in S for x in t)
    else:
        elements = sorted(tuple(sorted(e)) for e in h.edges())
        hits = lambda S, t: any(e in S for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))
    best = None
    for combo in itertools.combinations(elements, k):
        S = set(combo)
        value = sum(1 for t in tris if hits(S, t))
        if best is None or value > best[0]:
            best = (value, list(combo))
    return best


@given(small_graphs(n_max=9))
@settings(max_examples=80, deadline=None)
def test_node_opt_matches_reference(h):
    g = from_nx(h)
    for k in range(0, min(g.n, 3) + 1):
        res = brute_force_opt_nodes(g, k)
        value, best = _reference(h, k, "node")
        assert (res.opt_value, res.best_set) == (value, best)


@given(small_graphs(n_max=7))
@settings(max_examples=60, deadline=None)
def test_edge_opt_matches_reference(h):
    g = from_nx(h)
    for k in range(0, min(g.edge_count, 3) + 1):
        res = brute_force_opt_edges(g, k)
        value, best = _reference(h, k, "edge")
        assert (res.opt_value, [tuple(x) for x in res.best_set]) == (value, best)


def test_pruning_preserves_optimum():
    rng = random.Random(21)
    for _ in range(40):
        g = from_nx(random_nx(rng, n_max=12, p=0.5))
        for k in (1, 2, 3):
            if k <= g.n:
                assert brute_force_opt_nodes(g, k) == brute_force_opt_nodes(g, k, prune=False)
            if k <= g.edge_count:
                assert brute_force_opt_edges(g, k) == brute_force_opt_edges(g, k, prune=False)


def test_known_optima():
    g = from_nx(CORPUS["K5"][0])
    assert brute_force_opt_nodes(g, 2).opt_value == 9
    assert brute_force_opt_edges(g, 1).opt_value == 3
    bow = from_nx(CORPUS["bowtie"][0])
    assert brute_force_opt_nodes(bow, 1).best_set == [2]


def test_min_break():
    g = from_nx(CORPUS["K5"][0])
    res = brute_force_min_break(g, 9)
    assert res.size == 2 and res.opt_value >= 9
    assert brute_force_min_break(g, 10).size == 3
    with pytest.raises(InfeasibleError):
        brute_force_min_break(g, 11)
    res = brute_force_min_break(g, 4, target="edge")
    assert res.size == 2 and res.opt_value >= 4


def test_guard():
    g = from_nx(nx.complete_graph(40))
    with pytest.raises(InstanceTooLargeError):
        brute_force_opt_edges(g, 5)


def test_bad_k(bowtie):
    with pytest.raises(ValueError):
        brute_force_opt_nodes(bowtie, 6)
    with pytest.raises(ValueError):
        brute_force_opt_edges(bowtie, 7)
