"""Exact solvers by subset enumeration, for tiny instances only.

Each candidate element is turned into the bitmask of triangles it touches;
the value of a subset is the popcount of the OR of its masks. Enumeration is
lexicographic over elements sorted by original id, and only a strictly
better value replaces the incumbent, so the reported set is the
lexicographically smallest optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleError, InstanceTooLargeError
from .graph import Graph
from .triangles import list_triangles

MAX_SUBSETS = 10**7


@dataclass(frozen=True)
class OptResult:
    best_set: list
    opt_value: int

    @property
    def size(self) -> int:
        return len(self.best_set)

    def to_dict(self):
        return {"best_set": [list(x) if isinstance(x, tuple) else x for x in self.best_set],
                "opt_value": self.opt_value}


def _coverage(g: Graph, target: str):
    """(elements sorted by original id, triangle bitmask per element)."""
    orig = g.labels.to_original
    tris = list(list_triangles(g))
    if target == "node":
        elements = sorted(int(orig[u]) for u in g.live_nodes())
        masks = dict.fromkeys(elements, 0)
        for i, t in enumerate(tris):
            for x in t:
                masks[int(orig[x])] |= 1 << i
    elif target == "edge":
        elements = g.original_edge_pairs()
        masks = dict.fromkeys(elements, 0)
        for i, (a, b, c) in enumerate(tris):
            for x, y in ((a, b), (a, c), (b, c)):
                masks[g.labels.original_edge(x, y)] |= 1 << i
    else:
        raise ValueError(f"unknown target {target!r}")
    return elements, [masks[x] for x in elements], len(tris)


def popcount(x: int) -> int:
    return bin(x).count("1")


def _search(masks, k, prune):
    n = len(masks)
    gains = [popcount(m) for m in masks]
    # best r standalone gains within each suffix, for the pruning bound
    suffix_top = [sorted(gains[i:], reverse=True) for i in range(n + 1)]
    best_value = -1
    best = ()

    def rec(start, chosen, mask):
        nonlocal best_value, best
        r = k - len(chosen)
        if r == 0:
            value = popcount(mask)
            if value > best_value:
                best_value, best = value, tuple(chosen)
            return
        if prune and popcount(mask) + sum(suffix_top[start][:r]) <= best_value:
            return
        for i in range(start, n - r + 1):
            chosen.append(i)
            rec(i + 1, chosen, mask | masks[i])
            chosen.pop()

    rec(0, [], 0)
    return best_value, best


def _opt(g, k, target, prune):
    elements, masks, _ = _coverage(g, target)
    if not 0 <= k <= len(elements):
        raise ValueError(f"k={k} outside 0..{len(elements)}")
    if math.comb(len(elements), k) > MAX_SUBSETS:
        raise InstanceTooLargeError(
            f"C({len(elements)}, {k}) subsets exceeds the {MAX_SUBSETS} guard"
        )
    value, picks = _search(masks, k, prune)
    return OptResult([elements[i] for i in picks], value)


def brute_force_opt_nodes(g: Graph, k: int, prune: bool = True) -> OptResult:
    return _opt(g, k, "node", prune)


def brute_force_opt_edges(g: Graph, k: int, prune: bool = True) -> OptResult:
    return _opt(g, k, "edge", prune)


def brute_force_min_break(g: Graph, p: int, target: str = "node") -> OptResult:
    """Smallest subset breaking at least ``p`` triangles (``opt_value`` = broken count)."""
    elements, masks, total = _coverage(g, target)
    if p > total:
        raise InfeasibleError(f"p={p} exceeds the {total} triangles in the graph")
    for size in range(len(elements) + 1):
        if math.comb(len(elements), size) > MAX_SUBSETS:
            raise InstanceTooLargeError(
                f"C({len(elements)}, {size}) subsets exceeds the {MAX_SUBSETS} guard"
            )
        value, picks = _search(masks, size, prune=True)
        if value >= p:
            return OptResult([elements[i] for i in picks], value)
    raise AssertionError("unreachable: removing everything breaks every triangle")
