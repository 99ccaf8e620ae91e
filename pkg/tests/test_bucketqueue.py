import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, initialize, invariant, precondition, rule

from tribreak.bucketqueue import DecrementMaxQueue


class ReferenceQueue:
    """Linear scan over a dict; the obviously-correct model."""

    def __init__(self, scores):
        self.score = dict(enumerate(scores))

    def pop(self):
        x = min(self.score, key=lambda i: (-self.score[i], i))
        return x, self.score.pop(x)


class QueueMachine(RuleBasedStateMachine):
    @initialize(scores=st.lists(st.integers(0, 6), min_size=1, max_size=25))
    def build(self, scores):
        self.q = DecrementMaxQueue(scores)
        self.ref = ReferenceQueue(scores)

    @precondition(lambda self: len(self.ref.score) > 0)
    @rule()
    def pop(self):
        assert self.q.pop_max_with_score() == self.ref.pop()

    @precondition(lambda self: any(v > 0 for v in self.ref.score.values()))
    @rule(data=st.data())
    def decrement(self, data):
        x = data.draw(st.sampled_from(sorted(i for i, v in self.ref.score.items() if v > 0)))
        self.q.decrement(x)
        self.ref.score[x] -= 1

    @rule()
    def pop_when_empty(self):
        if not self.ref.score:
            with pytest.raises(IndexError):
                self.q.pop_max()

    @invariant()
    def agree(self):
        assert len(self.q) == len(self.ref.score)
        for x, v in self.ref.score.items():
            assert self.q.score_of(x) == v
            assert v <= self.q.max_score


TestQueueAgainstReference = QueueMachine.TestCase
TestQueueAgainstReference.settings = settings(max_examples=200, stateful_step_count=60, deadline=None)


@given(st.lists(st.integers(0, 50), max_size=200))
def test_drain_order_is_score_desc_then_id(scores):
    q = DecrementMaxQueue(scores)
    got = [q.pop_max() for _ in range(len(scores))]
    assert got == sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    with pytest.raises(IndexError):
        q.pop_max()


def test_mapping_keys():
    q = DecrementMaxQueue.build({"x": 2, "a": 2, "m": 5})
    q.decrement("m")
    q.decrement("m")
    q.decrement("m")
    assert [q.pop_max() for _ in range(3)] == ["a", "m", "x"]


def test_errors():
    q = DecrementMaxQueue([0, 1])
    with pytest.raises(ValueError):
        q.decrement(0)
    assert q.pop_max() == 1
    with pytest.raises(KeyError):
        q.decrement(1)
    with pytest.raises(KeyError):
        q.decrement(7)
    assert 1 not in q and 0 in q
    with pytest.raises(ValueError):
        DecrementMaxQueue([1, -1])


def test_empty_queue():
    q = DecrementMaxQueue([])
    assert len(q) == 0 and q.max_score == -1
    with pytest.raises(IndexError):
        q.pop_max()


def test_decrement_to_zero_then_scan():
    q = DecrementMaxQueue([1, 1, 1])
    q.decrement(2)
    q.decrement(0)
    assert [q.pop_max() for _ in range(3)] == [1, 0, 2]
