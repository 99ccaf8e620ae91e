"""Triangle counting and listing.

:func:`count_forward` is the degree-ordered forward algorithm (O(m^1.5));
:func:`count_naive` is a set-intersection reference kept deliberately
independent of it so the two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph


@dataclass
class TriangleIndex:
    """Per-node counts ``T(u)``, per-edge counts ``tr(e)`` and the total.

    ``node_counts`` is indexed by internal label and ``edge_counts`` by
    canonical edge id; tombstoned entries hold 0.
    """

    node_counts: np.ndarray
    edge_counts: np.ndarray
    total: int

    def node(self, u: int) -> int:
        return int(self.node_counts[u])

    def edge(self, g: Graph, u: int, v: int) -> int:
        e = g.edge_id(u, v)
        if e < 0:
            raise KeyError(f"no edge ({u}, {v})")
        return int(self.edge_counts[e])

    def __eq__(self, other):
        if not isinstance(other, TriangleIndex):
            return NotImplemented
        return (
            self.total == other.total
            and np.array_equal(self.node_counts, other.node_counts)
            and np.array_equal(self.edge_counts, other.edge_counts)
        )


@dataclass
class TriangleList:
    """Triangles as rows ``(a, b, c)`` of internal labels with a < b < c."""

    triples: np.ndarray

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        for a, b, c in self.triples:
            yield int(a), int(b), int(c)

    def as_original(self, g: Graph) -> list[tuple[int, int, int]]:
        orig = g.labels.to_original
        return sorted(tuple(sorted(int(orig[x]) for x in t)) for t in self.triples)


def count_forward(g: Graph) -> TriangleIndex:
    T, tr, total = _kernels.forward_count(
        g.n, g.indptr, g.indices, g.slot_edge, g.edge_removed, g.node_removed, g.total_edges
    )
    return TriangleIndex(T, tr, int(total))


def count_naive(g: Graph) -> TriangleIndex:
    """Reference counter: intersect neighbor sets across every live edge."""
    adj = [set(g.neighbors(u).tolist()) if g.is_live(u) else set() for u in range(g.n)]
    T = np.zeros(g.n, dtype=np.int64)
    tr = np.zeros(g.total_edges, dtype=np.int64)
    total = 0
    for e in g.live_edge_ids():
        a, b = (int(x) for x in g.edges[e])
        common = adj[a] & adj[b]
        tr[e] = len(common)
        for w in common:
            if w > b:
                total += 1
                T[a] += 1
                T[b] += 1
                T[w] += 1
    return TriangleIndex(T, tr, total)


def list_triangles(g: Graph) -> TriangleList:
    total = count_forward(g).total
    out = _kernels.forward_list(
        g.n, g.indptr, g.indices, g.slot_edge, g.edge_removed, g.node_removed, total
    )
    if len(out):
        out = out[np.lexsort((out[:, 2], out[:, 1], out[:, 0]))]
    return TriangleList(out.reshape(-1, 3))
