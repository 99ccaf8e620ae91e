"""Triangle-breaking edge selection (discounting greedy and references)."""

from __future__ import annotations

import time

import numpy as np

from . import _kernels
from .bucketqueue import DecrementMaxQueue
from .errors import InfeasibleError, PlanMismatchError
from .graph import Graph
from .plan import BoundReport, RemovalPlan, check_budget, cumulative_sums, make_bound
from .triangles import count_forward, count_naive


class EdgeDiscounter:
    """Edge analogue of :class:`tribreak.node_breaker.NodeDiscounter`.

    Removing edge ``(a, b)`` breaks exactly the triangles ``(a, b, w)`` for
    live common neighbors ``w``; each such triangle loses one from the
    counters of ``(a, w)`` and ``(b, w)``.
    """

    def __init__(self, g: Graph):
        self.rank_edge = g.original_edge_order()
        self.graph = g.copy()
        t0 = time.perf_counter()
        index = count_forward(self.graph)
        self.phase1_s = time.perf_counter() - t0
        self.total = index.total
        t0 = time.perf_counter()

        self.edge_rank = np.empty_like(self.rank_edge)
        self.edge_rank[self.rank_edge] = np.arange(len(self.rank_edge))
        self.queue = DecrementMaxQueue(index.edge_counts[self.rank_edge])
        dead = self.edge_rank[np.flatnonzero(self.graph.edge_removed)]
        self.queue.alive[dead] = False
        self.queue._live -= len(dead)
        self.phase2_s = time.perf_counter() - t0

        self.selected: list[int] = []
        self.gains: list[int] = []
        self.cumulative = 0

    @property
    def remaining(self) -> int:
        return len(self.queue)

    def step(self, count: int = 1, target: int = 0) -> int:
        count = min(count, self.remaining)
        out_rank = np.empty(count, dtype=np.int64)
        out_gain = np.empty(count, dtype=np.int64)
        g, q = self.graph, self.queue
        edge_count = np.array([g.edge_count], dtype=np.int64)
        t0 = time.perf_counter()
        done = _kernels.edge_discount_steps(
            g.indptr, g.indices, g.slot_edge, g.edges, g.degree,
            g.edge_removed, edge_count, q.pool, q.offset, q.sizes, q.score, q.alive,
            q.cursor, self.rank_edge, self.edge_rank, count, target,
            self.cumulative, out_rank, out_gain,
        )
        self.phase2_s += time.perf_counter() - t0
        g.edge_count = int(edge_count[0])
        q._live -= done
        self.selected.extend(self.rank_edge[out_rank[:done]].tolist())
        self.gains.extend(out_gain[:done].tolist())
        self.cumulative += int(out_gain[:done].sum())
        return done

    def residual_edge_counts(self) -> np.ndarray:
        """Maintained ``tr(e)`` per canonical edge id; 0 for removed edges."""
        out = self.queue.score[self.edge_rank].copy()
        out[self.graph.edge_removed] = 0
        return out

    def plan(self, method: str = "dak-e") -> RemovalPlan:
        g = self.graph
        selected = [g.labels.original_edge(*g.edges[e]) for e in self.selected]
        return RemovalPlan(
            kind="edge",
            method=method,
            selected=selected,
            gains=list(self.gains),
            cumulative=cumulative_sums(self.gains),
            total_triangles_initial=self.total,
            timings={"phase1_ms": self.phase1_s * 1e3, "phase2_ms": self.phase2_s * 1e3},
        )


def dak_e(g: Graph, k: int) -> RemovalPlan:
    check_budget(k, g.edge_count, "edges")
    run = EdgeDiscounter(g)
    run.step(k)
    return run.plan("dak-e")


def min_break_edge(g: Graph, p: int) -> RemovalPlan:
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    run = EdgeDiscounter(g)
    if p > run.total:
        raise InfeasibleError(f"p={p} exceeds the {run.total} triangles in the graph")
    run.step(run.remaining, target=p)
    return run.plan("dak-e-min")


def simple_greedy_edge(g: Graph, k: int) -> RemovalPlan:
    check_budget(k, g.edge_count, "edges")
    work = g.copy()
    total = count_naive(work).total
    selected, gains = [], []
    for _ in range(k):
        counts = count_naive(work).edge_counts
        best = None
        for e in work.live_edge_ids():
            key = (-int(counts[e]), work.labels.original_edge(*work.edges[e]))
            if best is None or key < best[0]:
                best = (key, int(e))
        (neg_gain, pair), e = best
        selected.append(pair)
        gains.append(-neg_gain)
        work.remove_edge(e)
    return RemovalPlan("edge", "simple-greedy", selected, gains, cumulative_sums(gains), total)


def bound_edge(g: Graph, plan: RemovalPlan) -> BoundReport:
    """Certificate ``T(F) / (T(F) + sum of the k largest residual tr(e))``."""
    if plan.kind != "edge":
        raise PlanMismatchError(f"expected an edge plan, got {plan.kind!r}")
    work = g.copy()
    before = count_forward(work).total
    if before != plan.total_triangles_initial:
        raise PlanMismatchError(
            f"plan was built on a graph with {plan.total_triangles_initial} triangles, this one has {before}"
        )
    for a, b in plan.selected:
        try:
            work.remove_edge((g.labels.internal(a), g.labels.internal(b)))
        except KeyError as exc:
            raise PlanMismatchError(f"cannot remove edge ({a}, {b}): {exc}") from None
    after = count_forward(work)
    objective = before - after.total
    if plan.cumulative and objective != plan.cumulative[-1]:
        raise PlanMismatchError(f"plan claims {plan.cumulative[-1]} broken, graph shows {objective}")
    residual = after.edge_counts[~work.edge_removed]
    return make_bound(objective, residual, len(plan.selected))
