"""Synthetic graph generators.

The power-law generator follows the P(alpha, gamma) model: the number of
nodes of degree ``x`` is ``floor(e**alpha / x**gamma)`` for
``1 <= x <= e**(alpha/gamma)``. ``alpha`` is chosen by bisection so that
the degree sequence carries roughly the requested number of edges, then a
configuration model pairs the stubs; self-loops and repeated pairs are
dropped rather than resampled.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class PowerLawParams:
    target_edges: int
    gamma: float = 2.5
    seed: int = 0

    def to_dict(self):
        return asdict(self)


def power_law_degrees(alpha: float, gamma: float) -> np.ndarray:
    """Degree sequence of a P(alpha, gamma) graph (node counts per degree)."""
    max_deg = int(math.floor(math.exp(alpha / gamma) + 1e-9))
    x = np.arange(1, max_deg + 1, dtype=np.float64)
    counts = np.floor(np.exp(alpha - gamma * np.log(x)) + 1e-9).astype(np.int64)
    return np.repeat(np.arange(1, max_deg + 1), counts)


def solve_alpha(target_edges: int, gamma: float) -> float:
    """Smallest alpha (to 1e-9) whose degree sequence has >= target_edges edges."""
    def edges(alpha):
        return power_law_degrees(alpha, gamma).sum() / 2

    lo, hi = 0.0, 1.0
    while edges(hi) < target_edges:
        hi *= 2
    for _ in range(100):
        mid = (lo + hi) / 2
        if edges(mid) >= target_edges:
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-9:
            break
    return hi


def configuration_model(degrees, rng: np.random.Generator) -> np.ndarray:
    """Random stub matching; returns unique undirected pairs without loops."""
    degrees = np.asarray(degrees, dtype=np.int64)
    stubs = np.repeat(np.arange(len(degrees)), degrees)
    if len(stubs) % 2:
        stubs = stubs[:-1]
    rng.shuffle(stubs)
    pairs = stubs.reshape(-1, 2)
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]
    lo = np.minimum(pairs[:, 0], pairs[:, 1])
    hi = np.maximum(pairs[:, 0], pairs[:, 1])
    return np.unique(np.stack([lo, hi], axis=1), axis=0)


def power_law_graph(params: PowerLawParams) -> Graph:
    alpha = solve_alpha(params.target_edges, params.gamma)
    degrees = power_law_degrees(alpha, params.gamma)
    rng = np.random.default_rng(params.seed)
    pairs = configuration_model(degrees, rng)
    return Graph.from_edges(pairs, nodes=range(len(degrees)))


def gnp_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi G(n, p); isolated nodes are kept."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(np.stack([iu[keep], ju[keep]], axis=1), nodes=range(n))
