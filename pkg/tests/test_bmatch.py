import itertools
import random

import pytest

from starforest.bmatch import (
    BipGraph,
    DeficiencyCertificate,
    QuotaAssignment,
    max_uniform_quota,
    quota_matching,
)


def hall_feasible(b: BipGraph, quota: int) -> bool:
    """Exhaustive quota-Hall check: |N(X)| >= quota*|X| for all left subsets."""
    for k in range(1, b.n_left + 1):
        for subset in itertools.combinations(range(b.n_left), k):
            if len(b.neighborhood(subset)) < quota * k:
                return False
    return True


def check_assignment(b: BipGraph, result, quota: int) -> None:
    assert isinstance(result, QuotaAssignment)
    counts = {l: 0 for l in range(b.n_left)}
    for r, l in result.owner.items():
        assert r in b.adj[l]
        counts[l] += 1
    assert all(c == quota for c in counts.values())


def test_perfect_matching():
    b = BipGraph(3, 3, [[0, 1], [1, 2], [0, 2]])
    check_assignment(b, quota_matching(b, 1), 1)


def test_quota_two():
    b = BipGraph(2, 4, [[0, 1, 2], [1, 2, 3]])
    check_assignment(b, quota_matching(b, 2), 2)


def test_needs_reroute():
    # left 0 grabs right 0 first; left 1 must push it off
    b = BipGraph(2, 2, [[0, 1], [0]])
    result = quota_matching(b, 1)
    check_assignment(b, result, 1)
    assert result.owner[0] == 1 and result.owner[1] == 0


def test_certificate():
    b = BipGraph(3, 3, [[0], [0], [0, 1, 2]])
    result = quota_matching(b, 1)
    assert isinstance(result, DeficiencyCertificate)
    assert result.violator == frozenset({0, 1})
    assert result.neighborhood_size == 1
    assert result.neighborhood_size < result.quota * len(result.violator)


def test_empty_left():
    b = BipGraph(0, 3, [])
    assert isinstance(quota_matching(b, 1), QuotaAssignment)


def test_quota_guard():
    with pytest.raises(ValueError):
        quota_matching(BipGraph(1, 1, [[0]]), 0)


def test_max_uniform_quota_complete():
    b = BipGraph(2, 6, [list(range(6)), list(range(6))])
    assert max_uniform_quota(b) == 3


def test_max_uniform_quota_zero():
    b = BipGraph(2, 1, [[0], [0]])
    assert max_uniform_quota(b) == 0


def test_against_hall_oracle_small_fuzz():
    rng = random.Random(404)
    for _ in range(300):
        n_left = rng.randint(1, 6)
        n_right = rng.randint(1, 8)
        adj = [
            [r for r in range(n_right) if rng.random() < 0.5]
            for _ in range(n_left)
        ]
        b = BipGraph(n_left, n_right, adj)
        for quota in (1, 2):
            result = quota_matching(b, quota)
            if isinstance(result, QuotaAssignment):
                check_assignment(b, result, quota)
                assert hall_feasible(b, quota)
            else:
                assert not hall_feasible(b, quota)
                assert len(b.neighborhood(result.violator)) < quota * len(result.violator)
