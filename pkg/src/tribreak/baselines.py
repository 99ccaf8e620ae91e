"""Centrality and random baselines, plus the common set evaluator.

Baselines rank once on the intact graph (no re-ranking after removals).
Edge variants score an edge by the sum of its endpoint scores.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import Graph
from .triangles import count_forward

EDGE_SCORE_RULE = "endpoint_sum"


class PageRankNotConverged(RuntimeWarning):
    pass


@dataclass(frozen=True)
class PageRankConfig:
    damping: float = 0.85
    max_iters: int = 200
    tolerance: float = 1e-10

    def __post_init__(self):
        if not 0 < self.damping < 1:
            raise ValueError("damping must lie in (0, 1)")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")

    def to_dict(self):
        return {"damping": self.damping, "max_iters": self.max_iters, "tolerance": self.tolerance}


@dataclass
class PageRankResult:
    scores: np.ndarray
    iterations: int
    converged: bool


def _check_k(k, available):
    if not 0 <= k <= available:
        raise ValueError(f"k={k} outside 0..{available}")


def _rank_nodes(g: Graph, score: np.ndarray, k: int) -> list[int]:
    live = g.live_nodes()
    orig = g.labels.to_original[live]
    order = np.lexsort((orig, -score[live]))
    return [int(x) for x in orig[order[:k]]]


def _rank_edges(g: Graph, node_score: np.ndarray, k: int) -> list[tuple[int, int]]:
    live = g.live_edge_ids()
    a, b = g.edges[live, 0], g.edges[live, 1]
    s = node_score[a] + node_score[b]
    orig = g.labels.to_original
    oa, ob = orig[a], orig[b]
    lo, hi = np.minimum(oa, ob), np.maximum(oa, ob)
    order = np.lexsort((hi, lo, -s))[:k]
    return [(int(lo[i]), int(hi[i])) for i in order]


def max_degree_nodes(g: Graph, k: int) -> list[int]:
    _check_k(k, len(g.live_nodes()))
    return _rank_nodes(g, g.degree.astype(np.float64), k)


def max_degree_edges(g: Graph, k: int) -> list[tuple[int, int]]:
    _check_k(k, g.edge_count)
    return _rank_edges(g, g.degree.astype(np.float64), k)


def pagerank_scores(g: Graph, cfg: PageRankConfig = PageRankConfig()) -> PageRankResult:
    """Power iteration with uniform teleport; dangling mass spread uniformly.

    Scores of removed nodes are 0; live scores sum to 1.
    """
    live = g.live_nodes()
    nl = len(live)
    pos = np.full(g.n, -1, dtype=np.int64)
    pos[live] = np.arange(nl)
    e = g.edges[~g.edge_removed]
    rows = np.concatenate([pos[e[:, 0]], pos[e[:, 1]]])
    cols = np.concatenate([pos[e[:, 1]], pos[e[:, 0]]])
    adj = sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(nl, nl))
    deg = np.asarray(adj.sum(axis=1)).ravel()
    dangling = deg == 0
    inv = np.divide(1.0, deg, out=np.zeros(nl), where=~dangling)
    x = np.full(nl, 1.0 / nl)
    converged = False
    it = 0
    for it in range(1, cfg.max_iters + 1):
        spread = adj @ (x * inv)
        nxt = cfg.damping * (spread + x[dangling].sum() / nl) + (1.0 - cfg.damping) / nl
        delta = np.abs(nxt - x).sum()
        x = nxt
        if delta < cfg.tolerance:
            converged = True
            break
    full = np.zeros(g.n)
    full[live] = x
    return PageRankResult(full, it, converged)


def _pagerank(g, cfg):
    res = pagerank_scores(g, cfg)
    if not res.converged:
        warnings.warn(
            f"PageRank did not reach tolerance {cfg.tolerance} in {cfg.max_iters} iterations",
            PageRankNotConverged,
            stacklevel=3,
        )
    # rounding keeps floating noise from splitting exact-symmetry ties
    return np.round(res.scores, 12)


def pagerank_nodes(g: Graph, k: int, cfg: PageRankConfig = PageRankConfig()) -> list[int]:
    _check_k(k, len(g.live_nodes()))
    return _rank_nodes(g, _pagerank(g, cfg), k)


def pagerank_edges(g: Graph, k: int, cfg: PageRankConfig = PageRankConfig()) -> list[tuple[int, int]]:
    _check_k(k, g.edge_count)
    return _rank_edges(g, _pagerank(g, cfg), k)


def random_nodes(g: Graph, k: int, seed: int) -> list[int]:
    live = g.live_nodes()
    _check_k(k, len(live))
    ids = np.sort(g.labels.to_original[live])
    # prefixes of one seeded permutation: a larger k extends a smaller one
    pick = np.random.default_rng(seed).permutation(len(ids))[:k]
    return [int(ids[i]) for i in pick]


def random_edges(g: Graph, k: int, seed: int) -> list[tuple[int, int]]:
    _check_k(k, g.edge_count)
    pairs = g.original_edge_pairs()
    pick = np.random.default_rng(seed).permutation(len(pairs))[:k]
    return [pairs[i] for i in pick]


@dataclass
class Evaluation:
    broken: int
    cumulative: list[int]


def evaluate_set(g: Graph, elements, target: str = "node") -> Evaluation:
    """Count triangles broken by removing ``elements`` (original ids) from ``g``.

    ``broken`` comes from recounting before and after on a scratch copy; the
    per-step curve counts the live triangles at each element just before it
    goes.
    """
    if target not in ("node", "edge"):
        raise ValueError(f"unknown target {target!r}")
    work = g.copy()
    before = count_forward(work).total
    curve, running = [], 0
    for item in elements:
        if target == "node":
            u = g.labels.internal(item)
            if not work.is_live(u):
                raise ValueError(f"node {item} listed twice or already removed")
            nb = work.neighbors(u)
            # live edges inside the neighborhood, each seen from both ends
            gain = sum(int(np.isin(work.neighbors(v), nb).sum()) for v in nb) // 2
            work.remove_node(u)
        else:
            a, b = (g.labels.internal(x) for x in item)
            if not work.has_edge(a, b):
                raise ValueError(f"edge {tuple(item)} absent, listed twice or already removed")
            gain = len(work.common_neighbors(a, b))
            work.remove_edge((a, b))
        running += gain
        curve.append(running)
    broken = before - count_forward(work).total
    if curve and curve[-1] != broken:
        raise AssertionError(f"curve end {curve[-1]} disagrees with recount {broken}")
    return Evaluation(broken, curve)
