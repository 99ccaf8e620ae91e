"""Triangle-breaking node selection.

The discounting greedy (:func:`dak_n`) counts triangles once, then repeatedly
pops the node with the most surviving triangles and discounts its
neighbors locally. :func:`simple_greedy_node` is the textbook greedy that
recounts everything each round; it exists as a reference.
"""

from __future__ import annotations

import time

import numpy as np

from . import _kernels
from .bucketqueue import DecrementMaxQueue
from .errors import InfeasibleError, PlanMismatchError
from .graph import Graph
from .plan import BoundReport, RemovalPlan, check_budget, cumulative_sums, make_bound
from .triangles import count_forward, count_naive


class NodeDiscounter:
    """Stateful discounting run over a private copy of ``g``.

    Phase 1 (the forward count) runs in the constructor; :meth:`step` runs
    Phase 2 one or more pops at a time so callers can inspect the residual
    counts between steps.
    """

    def __init__(self, g: Graph):
        self.rank_node = g.original_node_order()
        self.graph = g.copy()
        t0 = time.perf_counter()
        index = count_forward(self.graph)
        self.phase1_s = time.perf_counter() - t0
        self.total = index.total
        t0 = time.perf_counter()

        self.node_rank = np.empty_like(self.rank_node)
        self.node_rank[self.rank_node] = np.arange(g.n)
        self.queue = DecrementMaxQueue(index.node_counts[self.rank_node])
        dead = self.node_rank[np.flatnonzero(self.graph.node_removed)]
        self.queue.alive[dead] = False
        self.queue._live -= len(dead)
        self.phase2_s = time.perf_counter() - t0

        self._mark = np.zeros(g.n, dtype=np.bool_)
        self.selected: list[int] = []
        self.gains: list[int] = []
        self.cumulative = 0

    @property
    def remaining(self) -> int:
        return len(self.queue)

    def step(self, count: int = 1, target: int = 0) -> int:
        """Select up to ``count`` nodes, stopping once ``target`` is broken."""
        count = min(count, self.remaining)
        out_rank = np.empty(count, dtype=np.int64)
        out_gain = np.empty(count, dtype=np.int64)
        g, q = self.graph, self.queue
        edge_count = np.array([g.edge_count], dtype=np.int64)
        t0 = time.perf_counter()
        done = _kernels.node_discount_steps(
            g.indptr, g.indices, g.slot_edge, g.degree, g.node_removed,
            g.edge_removed, edge_count, q.pool, q.offset, q.sizes, q.score, q.alive,
            q.cursor, self.rank_node, self.node_rank, self._mark, count,
            target, self.cumulative, out_rank, out_gain,
        )
        self.phase2_s += time.perf_counter() - t0
        g.edge_count = int(edge_count[0])
        q._live -= done
        self.selected.extend(self.rank_node[out_rank[:done]].tolist())
        self.gains.extend(out_gain[:done].tolist())
        self.cumulative += int(out_gain[:done].sum())
        return done

    def residual_node_counts(self) -> np.ndarray:
        """Maintained ``T(u)`` per internal label; 0 for removed nodes."""
        out = self.queue.score[self.node_rank].copy()
        out[self.graph.node_removed] = 0
        return out

    def plan(self, method: str = "dak-n") -> RemovalPlan:
        orig = self.graph.labels.to_original
        return RemovalPlan(
            kind="node",
            method=method,
            selected=[int(orig[u]) for u in self.selected],
            gains=list(self.gains),
            cumulative=cumulative_sums(self.gains),
            total_triangles_initial=self.total,
            timings={"phase1_ms": self.phase1_s * 1e3, "phase2_ms": self.phase2_s * 1e3},
        )


def dak_n(g: Graph, k: int) -> RemovalPlan:
    """Discounting greedy for the k-node problem."""
    check_budget(k, g.n - int(g.node_removed.sum()), "nodes")
    run = NodeDiscounter(g)
    run.step(k)
    return run.plan("dak-n")


def min_break_node(g: Graph, p: int) -> RemovalPlan:
    """Fewest nodes (greedily) whose removal breaks at least ``p`` triangles."""
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    run = NodeDiscounter(g)
    if p > run.total:
        raise InfeasibleError(f"p={p} exceeds the {run.total} triangles in the graph")
    run.step(run.remaining, target=p)
    return run.plan("dak-n-min")


def simple_greedy_node(g: Graph, k: int) -> RemovalPlan:
    """Recount-every-round greedy; ties go to the smallest original id."""
    check_budget(k, g.n - int(g.node_removed.sum()), "nodes")
    work = g.copy()
    orig = g.labels.to_original
    total = count_naive(work).total
    selected, gains = [], []
    for _ in range(k):
        counts = count_naive(work).node_counts
        best = None
        for u in work.live_nodes():
            key = (-int(counts[u]), int(orig[u]))
            if best is None or key < best[0]:
                best = (key, int(u))
        (neg_gain, ident), u = best
        selected.append(ident)
        gains.append(-neg_gain)
        work.remove_node(u)
    return RemovalPlan("node", "simple-greedy", selected, gains, cumulative_sums(gains), total)


def bound_node(g: Graph, plan: RemovalPlan) -> BoundReport:
    """Certificate ``T(S) / (T(S) + sum of the k largest residual T(u))``."""
    if plan.kind != "node":
        raise PlanMismatchError(f"expected a node plan, got {plan.kind!r}")
    work = g.copy()
    before = count_forward(work).total
    if before != plan.total_triangles_initial:
        raise PlanMismatchError(
            f"plan was built on a graph with {plan.total_triangles_initial} triangles, this one has {before}"
        )
    for ident in plan.selected:
        try:
            work.remove_node(g.labels.internal(ident))
        except KeyError as exc:
            raise PlanMismatchError(f"cannot remove node {ident}: {exc}") from None
    after = count_forward(work)
    objective = before - after.total
    if plan.cumulative and objective != plan.cumulative[-1]:
        raise PlanMismatchError(f"plan claims {plan.cumulative[-1]} broken, graph shows {objective}")
    residual = after.node_counts[~work.node_removed]
    return make_bound(objective, residual, len(plan.selected))
