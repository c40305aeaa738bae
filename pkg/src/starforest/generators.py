"""Instance generators: random regular graphs, quadratic-residue bipartite
graphs, complete bipartite graphs, and spanning regular subgraphs."""

from __future__ import annotations

import random

from .bmatch import BipGraph, QuotaAssignment, quota_matching
from .graph import Graph, GraphError


class GenerationError(RuntimeError):
    def __init__(self, retries: int):
        super().__init__(f"no simple pairing found after {retries} attempts")
        self.retries = retries


def _pairing_attempt(n: int, d: int, rng: random.Random) -> set[tuple[int, int]] | None:
    """One configuration-model draw with stub re-pooling.

    Shuffle the n*d stubs and pair consecutively; stubs whose pair would
    create a loop or multi-edge go back into the pool. Adapted from the
    standard NetworkX sampler; returns None when stuck.
    """
    edges: set[tuple[int, int]] = set()
    stubs = list(range(n)) * d
    while stubs:
        leftovers: dict[int, int] = {}
        rng.shuffle(stubs)
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftovers[s1] = leftovers.get(s1, 0) + 1
                leftovers[s2] = leftovers.get(s2, 0) + 1
        if leftovers and not _has_suitable_edge(edges, leftovers):
            return None
        stubs = [v for v, k in leftovers.items() for _ in range(k)]
    return edges


def _has_suitable_edge(edges: set[tuple[int, int]], leftovers: dict[int, int]) -> bool:
    for s1 in leftovers:
        for s2 in leftovers:
            if s1 == s2:
                break
            a, b = (s2, s1) if s1 > s2 else (s1, s2)
            if (a, b) not in edges:
                return True
    return False


def random_regular(n: int, d: int, seed: int = 0, max_retries: int = 100) -> Graph:
    """Random simple d-regular graph on n vertices (configuration model).

    Deterministic in (n, d, seed). Raises GenerationError when no simple
    draw is found within max_retries (expected for dense d close to n).
    """
    if (n * d) % 2 != 0:
        raise GraphError("n * d must be even")
    if not 0 <= d < n:
        raise GraphError(f"need 0 <= d < n, got d={d}, n={n}")
    rng = random.Random(seed)
    for _ in range(max_retries):
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            g = Graph(n, edges)
            assert all(g.degree(v) == d for v in range(n))
            return g
    raise GenerationError(max_retries)


def is_prime(p: int) -> bool:
    """Trial division; inputs are desk-scale."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def quadratic_residues(p: int) -> frozenset[int]:
    """Nonzero squares mod p."""
    return frozenset((x * x) % p for x in range(1, p))


def paley_bipartite(p: int) -> Graph:
    """Bipartite graph on classes {0..p-1} and {p..2p-1}.

    a (first class) and b (second class, label b - p) are adjacent iff
    (a - b) mod p is a quadratic non-residue. (p-1)/2-regular for odd p.
    """
    if not is_prime(p) or p == 2:
        raise GraphError(f"{p} is not an odd prime")
    non_residues = frozenset(range(1, p)) - quadratic_residues(p)
    edges = [
        (a, p + b)
        for a in range(p)
        for b in range(p)
        if (a - b) % p in non_residues
    ]
    return Graph(2 * p, edges)


def smallest_paley_prime(d: int) -> int:
    """Smallest odd prime p with (p-1)/2 >= d."""
    p = max(3, 2 * d + 1)
    while not (is_prime(p) and p % 2 == 1):
        p += 1
    return p


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-class on ids 0..a-1."""
    if a < 1 or b < 1:
        raise GraphError("both classes must be nonempty")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def _bipartition(g: Graph) -> tuple[list[int], list[int]]:
    """Two-color by BFS; raises GraphError when the graph is not bipartite."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    raise GraphError("graph is not bipartite")
    left = [v for v in range(g.n) if color[v] == 0]
    right = [v for v in range(g.n) if color[v] == 1]
    return left, right


def spanning_regular_subgraph(g: Graph, d: int, seed: int = 0) -> Graph:
    """Spanning d-regular subgraph of a D-regular bipartite graph, D >= d.

    Realized by peeling d successive perfect matchings (Hall guarantees each
    exists in a regular bipartite graph). The seed permutes the matching
    search order only; the output is deterministic per (g, d, seed).
    """
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) != 1:
        raise GraphError("input graph is not regular")
    big_d = degs.pop()
    if not 1 <= d <= big_d:
        raise GraphError(f"need 1 <= d <= {big_d}, got {d}")
    left, right = _bipartition(g)
    if len(left) != len(right):
        raise GraphError("regular bipartite graph must have equal sides")

    rng = random.Random(seed)
    rank = list(range(len(right)))
    rng.shuffle(rank)  # permuted right labels vary the matchings chosen
    right_index = {v: i for i, v in enumerate(right)}
    remaining: list[set[int]] = [
        {rank[right_index[u]] for u in g.adj[v]} for v in left
    ]
    unrank = {rank[i]: right[i] for i in range(len(right))}

    chosen: list[tuple[int, int]] = []
    for _ in range(d):
        b = BipGraph(len(left), len(right), remaining)
        result = quota_matching(b, 1)
        if not isinstance(result, QuotaAssignment):
            raise GraphError("internal error: perfect matching must exist")
        for r, l in result.owner.items():
            chosen.append((left[l], unrank[r]))
            remaining[l].discard(r)
    return Graph(g.n, chosen)
