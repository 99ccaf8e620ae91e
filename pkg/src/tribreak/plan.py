from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


@dataclass
class RemovalPlan:
    """Ordered selection with per-step marginal gains.

    ``selected`` holds original node ids, or ``(lo, hi)`` original-id pairs
    for edge plans.
    """

    kind: str
    method: str
    selected: list
    gains: list[int]
    cumulative: list[int]
    total_triangles_initial: int
    timings: dict = field(default_factory=dict)

    @property
    def broken(self) -> int:
        return self.cumulative[-1] if self.cumulative else 0

    @property
    def residual(self) -> int:
        return self.total_triangles_initial - self.broken

    def to_dict(self) -> dict:
        sel = [list(x) for x in self.selected] if self.kind == "edge" else list(self.selected)
        return {
            "method": self.method,
            "target": self.kind,
            "k": len(self.selected),
            "selected": sel,
            "gains": list(self.gains),
            "cumulative": list(self.cumulative),
            "total_triangles": self.total_triangles_initial,
        }


@dataclass(frozen=True)
class BoundReport:
    """Input-dependent optimality certificate: ratio >= objective / OPT."""

    objective: int
    upper_bound: int
    ratio: Fraction

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "upper_bound": self.upper_bound,
            "ratio": float(self.ratio),
            "ratio_exact": f"{self.ratio.numerator}/{self.ratio.denominator}",
        }


def make_bound(objective: int, residual_gains: np.ndarray, k: int) -> BoundReport:
    top = np.sort(np.asarray(residual_gains, dtype=np.int64))[::-1][:k]
    upper = int(objective + top.sum())
    # nothing to break at all: the empty objective is optimal
    ratio = Fraction(objective, upper) if upper > 0 else Fraction(1)
    return BoundReport(int(objective), upper, ratio)


def cumulative_sums(gains) -> list[int]:
    return [int(x) for x in np.cumsum(np.asarray(gains, dtype=np.int64))]


def check_budget(k: int, available: int, what: str) -> None:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise TypeError(f"k must be an integer, got {k!r}")
    if not 1 <= k <= available:
        raise ValueError(f"k={k} outside 1..{available} live {what}")
