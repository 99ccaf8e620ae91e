"""Undirected simple graphs in CSR form with tombstone removal.

Nodes carry dense internal labels ``0..n-1`` assigned so that a smaller label
never has a larger degree (ties broken by original id). All methods of
:class:`Graph` speak internal labels; :class:`RelabelMap` translates to and
from the ids found in the input file.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import GraphFormatError


class EdgeKey(NamedTuple):
    lo: int
    hi: int

    @classmethod
    def of(cls, u, v):
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not an edge")
        return cls(u, v) if u < v else cls(v, u)


@dataclass(frozen=True)
class RelabelMap:
    """Bijection between original node ids and internal labels."""

    to_original: np.ndarray

    def __post_init__(self):
        lookup = {int(orig): i for i, orig in enumerate(self.to_original)}
        if len(lookup) != len(self.to_original):
            raise ValueError("original ids are not unique")
        object.__setattr__(self, "_lookup", lookup)

    def __len__(self):
        return len(self.to_original)

    @property
    def to_internal(self) -> dict[int, int]:
        return dict(self._lookup)

    def internal(self, original: int) -> int:
        try:
            return self._lookup[int(original)]
        except KeyError:
            raise KeyError(f"unknown node id {original}") from None

    def original(self, label: int) -> int:
        return int(self.to_original[label])

    def original_edge(self, lo: int, hi: int) -> tuple[int, int]:
        a, b = self.original(lo), self.original(hi)
        return (a, b) if a < b else (b, a)


class Graph:
    """Undirected simple graph over internal labels.

    Attributes are plain numpy arrays so the numba kernels can consume them
    directly:

    ``indptr``/``indices``
        CSR rows sorted ascending; row ``u`` lists every neighbor ever present.
    ``slot_edge``
        canonical edge id of each directed slot; both slots of an undirected
        edge share the id, so per-edge counters need a single array.
    ``edges``
        ``(M, 2)`` array of ``(lo, hi)`` internal pairs in lexicographic order.
    ``degree``, ``node_removed``, ``edge_removed``
        live state; removals only flip tombstones.
    """

    def __init__(self, n, edges, labels=None):
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size and (edges.min() < 0 or edges.max() >= n):
            raise ValueError("edge endpoint out of range")
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        keep = lo != hi
        pairs = np.unique(np.stack([lo[keep], hi[keep]], axis=1), axis=0)
        pairs = pairs.reshape(-1, 2)
        m = len(pairs)

        src = np.concatenate([pairs[:, 0], pairs[:, 1]])
        dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
        eid = np.concatenate([np.arange(m), np.arange(m)])
        order = np.lexsort((dst, src))
        self.n = int(n)
        self.indices = dst[order].astype(np.int64)
        self.slot_edge = eid[order].astype(np.int64)
        counts = np.bincount(src, minlength=n)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=self.indptr[1:])
        self.edges = pairs.astype(np.int64)
        self.degree = counts.astype(np.int64)
        self.node_removed = np.zeros(n, dtype=np.bool_)
        self.edge_removed = np.zeros(m, dtype=np.bool_)
        self.edge_count = m
        if labels is None:
            labels = RelabelMap(np.arange(n, dtype=np.int64))
        self.labels = labels
        self._node_order = None
        self._edge_order = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], nodes: Iterable[int] = ()):
        """Build a degree-ordered graph from original-id edge pairs."""
        edges = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        ids = np.unique(np.concatenate([edges.ravel(), np.asarray(list(nodes), dtype=np.int64)]))
        if ids.size == 0:
            raise GraphFormatError("graph has no nodes")
        local = np.searchsorted(ids, edges)
        raw = cls(len(ids), local, RelabelMap(ids))
        return degree_order_relabel(raw)[0]

    @property
    def total_edges(self):
        """Number of canonical edges including tombstoned ones."""
        return len(self.edges)

    def copy(self) -> "Graph":
        g = object.__new__(Graph)
        g.n = self.n
        g.indptr = self.indptr
        g.indices = self.indices
        g.slot_edge = self.slot_edge
        g.edges = self.edges
        g.labels = self.labels
        g.degree = self.degree.copy()
        g.node_removed = self.node_removed.copy()
        g.edge_removed = self.edge_removed.copy()
        g.edge_count = self.edge_count
        g._node_order = self._node_order
        g._edge_order = self._edge_order
        return g

    def original_node_order(self) -> np.ndarray:
        """Internal labels sorted by original id (cached)."""
        if self._node_order is None:
            self._node_order = np.argsort(self.labels.to_original, kind="stable").astype(np.int64)
        return self._node_order

    def original_edge_order(self) -> np.ndarray:
        """Canonical edge ids sorted by original-id pair (cached)."""
        if self._edge_order is None:
            orig = self.labels.to_original
            a, b = orig[self.edges[:, 0]], orig[self.edges[:, 1]]
            self._edge_order = np.lexsort((np.maximum(a, b), np.minimum(a, b))).astype(np.int64)
        return self._edge_order

    # -- queries -----------------------------------------------------------

    def is_live(self, u: int) -> bool:
        return 0 <= u < self.n and not self.node_removed[u]

    def live_nodes(self) -> np.ndarray:
        return np.flatnonzero(~self.node_removed)

    def live_edge_ids(self) -> np.ndarray:
        return np.flatnonzero(~self.edge_removed)

    def neighbors(self, u: int) -> np.ndarray:
        lo, hi = self.indptr[u], self.indptr[u + 1]
        live = ~self.edge_removed[self.slot_edge[lo:hi]]
        return self.indices[lo:hi][live]

    def edge_id(self, u: int, v: int) -> int:
        """Canonical id of edge ``{u, v}`` (live or tombstoned); -1 if absent."""
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            return -1
        lo, hi = self.indptr[u], self.indptr[u + 1]
        pos = lo + int(np.searchsorted(self.indices[lo:hi], v))
        if pos < hi and self.indices[pos] == v:
            return int(self.slot_edge[pos])
        return -1

    def has_edge(self, u: int, v: int) -> bool:
        e = self.edge_id(u, v)
        return e >= 0 and not self.edge_removed[e]

    def edge_key(self, e: int) -> EdgeKey:
        return EdgeKey(int(self.edges[e, 0]), int(self.edges[e, 1]))

    def common_neighbors(self, u: int, v: int) -> list[int]:
        """Sorted live common neighbors of ``u`` and ``v``."""
        for x in (u, v):
            if not self.is_live(x):
                raise KeyError(f"node {x} is not live")
        both = np.intersect1d(self.neighbors(u), self.neighbors(v), assume_unique=True)
        return both.tolist()

    def live_edges(self) -> list[EdgeKey]:
        return [self.edge_key(e) for e in self.live_edge_ids()]

    # -- mutation ----------------------------------------------------------

    def remove_node(self, u: int) -> None:
        if not self.is_live(u):
            raise KeyError(f"node {u} is absent or already removed")
        lo, hi = self.indptr[u], self.indptr[u + 1]
        for s in range(lo, hi):
            e = self.slot_edge[s]
            if not self.edge_removed[e]:
                self.edge_removed[e] = True
                self.degree[self.indices[s]] -= 1
                self.edge_count -= 1
        self.degree[u] = 0
        self.node_removed[u] = True

    def remove_edge(self, e) -> None:
        """Tombstone an edge given as an :class:`EdgeKey`/pair or canonical id."""
        if isinstance(e, (tuple, list)):
            eid = self.edge_id(*e)
        else:
            eid = int(e) if 0 <= int(e) < self.total_edges else -1
        if eid < 0:
            raise KeyError(f"edge {e} is absent")
        if self.edge_removed[eid]:
            raise KeyError(f"edge {e} is already removed")
        a, b = self.edges[eid]
        self.edge_removed[eid] = True
        self.degree[a] -= 1
        self.degree[b] -= 1
        self.edge_count -= 1

    # -- output ------------------------------------------------------------

    def original_edge_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.labels.original_edge(int(a), int(b)) for a, b in self.edges[~self.edge_removed])

    def serialize(self) -> str:
        buf = io.StringIO()
        for a, b in self.original_edge_pairs():
            buf.write(f"{a}\t{b}\n")
        return buf.getvalue()

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def degree_order_relabel(g: Graph) -> tuple[Graph, RelabelMap]:
    """Relabel live nodes so that label order is (degree, original id) order.

    Tombstoned nodes and edges are dropped from the result.
    """
    live = g.live_nodes()
    orig = g.labels.to_original[live]
    deg = g.degree[live]
    order = np.lexsort((orig, deg))
    new_of_old = np.full(g.n, -1, dtype=np.int64)
    new_of_old[live[order]] = np.arange(len(live))
    edges = g.edges[~g.edge_removed]
    relabel = RelabelMap(orig[order].astype(np.int64))
    return Graph(len(live), new_of_old[edges], relabel), relabel


def parse_edge_list(stream) -> tuple[Graph, RelabelMap]:
    """Read a SNAP-style edge list (text or file object).

    Lines starting with ``#`` and blank lines are skipped. Direction,
    duplicate pairs and self-loops are discarded; a node seen only in a
    self-loop is still kept as an isolated node.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    pairs = []
    nodes = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise GraphFormatError(f"expected two node ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer node id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative node id in {line!r}", lineno)
        if u == v:
            nodes.add(u)
        else:
            pairs.append((u, v))
    if not pairs and not nodes:
        raise GraphFormatError("graph is empty")
    g = Graph.from_edges(pairs, nodes)
    return g, g.labels


def read_edge_list(path) -> tuple[Graph, RelabelMap]:
    """Parse an edge-list file; ``.gz`` files are decompressed on the fly."""
    import gzip

    path = str(path)
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt", encoding="utf-8", errors="replace") as fh:
        return parse_edge_list(fh)
