"""Max-priority bucket queue over non-negative integer scores.

Scores may only move down, one unit at a time. Elements sit in the bucket
of their score; a cursor walks down from the initial maximum and never
climbs back. Within a bucket the smallest id is served first, which makes
every greedy run deterministic. Each bucket is a binary min-heap with lazy
deletion: a decrement pushes the element into the next bucket down and
leaves a stale entry behind that is discarded when it surfaces. The zero
bucket is served by scanning ids in order, since nothing can be decremented
below zero.
"""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np

from . import _kernels


class DecrementMaxQueue:
    """Queue over dense ids ``0..N-1``, or over arbitrary sortable keys.

    >>> q = DecrementMaxQueue.build({"a": 3, "b": 1, "c": 3})
    >>> [q.pop_max() for _ in range(3)]
    ['a', 'c', 'b']
    """

    def __init__(self, scores):
        score = np.array(scores, dtype=np.int64).reshape(-1)
        if score.size and score.min() < 0:
            raise ValueError("scores must be non-negative")
        self.score = score
        self.alive = np.ones(len(score), dtype=np.bool_)
        self.pool, self.offset, self.sizes, top = _kernels.queue_build(score)
        self.cursor = np.array([top if len(score) else -1, 0], dtype=np.int64)
        self._live = len(score)
        self._keys = None
        self._index = None

    @classmethod
    def build(cls, scores) -> "DecrementMaxQueue":
        """Build from a mapping ``key -> score`` or a sequence indexed by id."""
        if isinstance(scores, Mapping):
            keys = sorted(scores)
            q = cls([scores[k] for k in keys])
            q._keys = keys
            q._index = {k: i for i, k in enumerate(keys)}
            return q
        return cls(scores)

    def __len__(self):
        return self._live

    def _id(self, x) -> int:
        if self._index is not None:
            try:
                return self._index[x]
            except KeyError:
                raise KeyError(f"{x!r} not in queue") from None
        x = int(x)
        if not 0 <= x < len(self.score):
            raise KeyError(f"{x!r} not in queue")
        return x

    def __contains__(self, x):
        try:
            return bool(self.alive[self._id(x)])
        except KeyError:
            return False

    def score_of(self, x) -> int:
        i = self._id(x)
        if not self.alive[i]:
            raise KeyError(f"{x!r} already popped")
        return int(self.score[i])

    @property
    def max_score(self) -> int:
        """Cursor value; an upper bound on every live score (-1 when drained)."""
        return int(self.cursor[0])

    def pop_max(self):
        if self._live == 0:
            raise IndexError("pop from empty queue")
        x, self.cursor[0], self.cursor[1] = _kernels.queue_pop(
            self.pool, self.offset, self.sizes, self.score, self.alive, self.cursor[0], self.cursor[1]
        )
        self._live -= 1
        return self._keys[x] if self._keys is not None else int(x)

    def pop_max_with_score(self):
        if self._live == 0:
            raise IndexError("pop from empty queue")
        x, self.cursor[0], self.cursor[1] = _kernels.queue_pop(
            self.pool, self.offset, self.sizes, self.score, self.alive, self.cursor[0], self.cursor[1]
        )
        self._live -= 1
        key = self._keys[x] if self._keys is not None else int(x)
        return key, int(self.score[x])

    def decrement(self, x) -> None:
        i = self._id(x)
        if not self.alive[i]:
            raise KeyError(f"{x!r} already popped")
        if self.score[i] == 0:
            raise ValueError(f"score of {x!r} is already 0")
        _kernels.queue_decrement(self.pool, self.offset, self.sizes, self.score, i)
