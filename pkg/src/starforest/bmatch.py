"""Bipartite quota matching with Hall-deficiency certificates.

Each left vertex must be assigned `quota` private right neighbors. The
quota is handled implicitly as a capacity (no materialized sub-vertices);
failure yields a set X of left vertices with |N(X)| < quota * |X|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union


class BipGraph:
    """Bipartite graph given by sorted right-neighbor lists per left vertex."""

    __slots__ = ("n_left", "n_right", "adj")

    def __init__(self, n_left: int, n_right: int, adj: Iterable[Iterable[int]]):
        self.n_left = n_left
        self.n_right = n_right
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(set(a))) for a in adj
        )
        if len(self.adj) != n_left:
            raise ValueError("adjacency length must equal n_left")
        for a in self.adj:
            if a and (a[0] < 0 or a[-1] >= n_right):
                raise ValueError("right vertex id out of range")

    def min_left_degree(self) -> int:
        if self.n_left == 0:
            return 0
        return min(len(a) for a in self.adj)

    def neighborhood(self, lefts: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for l in lefts:
            out.update(self.adj[l])
        return out


@dataclass
class QuotaAssignment:
    """Right vertex -> owning left vertex; every left owns exactly `quota`."""

    owner: dict[int, int]
    quota: int

    def leaves_of(self, left: int) -> list[int]:
        return sorted(r for r, l in self.owner.items() if l == left)


@dataclass
class DeficiencyCertificate:
    """Hall violator: |N(violator)| < quota * |violator|."""

    violator: frozenset[int]
    neighborhood_size: int
    quota: int


MatchResult = Union[QuotaAssignment, DeficiencyCertificate]


def _try_augment(b: BipGraph, root: int, owner: dict[int, int]) -> tuple[bool, set[int]]:
    """One augmenting-path search from `root` (iterative Kuhn step).

    Right neighbors are explored in ascending id order for determinism.
    The alternating path lives on the DFS stack: each frame records the
    right vertex through which its left vertex was entered, so flipping on
    success cannot chase stale cross-links. Returns (augmented?, visited
    right vertices).
    """
    visited: set[int] = set()
    # frames: (left vertex, right used to enter it or -1 for the root, iterator)
    stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(b.adj[root]))]
    while stack:
        left, _, it = stack[-1]
        pushed = False
        for r in it:
            if r in visited:
                continue
            visited.add(r)
            cur = owner.get(r)
            if cur is None:
                # flip along the current stack
                owner[r] = left
                for k in range(len(stack) - 1, 0, -1):
                    _, entry, _ = stack[k]
                    owner[entry] = stack[k - 1][0]
                return True, visited
            stack.append((cur, r, iter(b.adj[cur])))
            pushed = True
            break
        if not pushed:
            stack.pop()
    return False, visited


def quota_matching(b: BipGraph, quota: int) -> MatchResult:
    """Assign `quota` private rights to every left vertex, or certify failure.

    Left vertices are processed in ascending order, one capacity unit at a
    time. On a failed augmentation the alternating-reachability structure
    yields the violator set.
    """
    if quota < 1:
        raise ValueError("quota must be >= 1")
    owner: dict[int, int] = {}
    for left in range(b.n_left):
        for _ in range(quota):
            ok, visited = _try_augment(b, left, owner)
            if not ok:
                violator = {left} | {owner[r] for r in visited}
                n_size = len(b.neighborhood(violator))
                assert n_size < quota * len(violator)
                return DeficiencyCertificate(frozenset(violator), n_size, quota)
    return QuotaAssignment(owner, quota)


def max_uniform_quota(b: BipGraph) -> int:
    """Largest q >= 0 for which quota_matching(b, q) succeeds.

    Binary search over [0, min left degree]; q = 0 is always feasible.
    """
    if b.n_left == 0:
        return 0
    lo, hi = 0, b.min_left_degree()
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if isinstance(quota_matching(b, mid), QuotaAssignment):
            lo = mid
        else:
            hi = mid - 1
    return lo
