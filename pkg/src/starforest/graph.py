"""Immutable simple-graph core: edge-list parsing, degree queries, edge pruning."""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Contract violation on a graph operation."""


class EdgeListParseError(GraphError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Graph:
    """Simple undirected graph with dense vertex ids 0..n-1.

    Immutable after construction: no self-loops, no parallel edges,
    adjacency lists strictly sorted ascending.
    """

    __slots__ = ("n", "adj", "_adj_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )
        self._adj_sets: tuple[frozenset[int], ...] = tuple(
            frozenset(s) for s in adj
        )

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        """Graph on the same id space with `drop` vertices isolated."""
        dropped = set(drop)
        return Graph(
            self.n,
            ((u, v) for u, v in self.edges() if u not in dropped and v not in dropped),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def load_edge_list(text: str) -> Graph:
    """Parse "u v" lines into a Graph.

    Lines starting with '#' and blank lines are ignored. Duplicate edges
    collapse; n is 1 + max vertex id. Every id in 0..n-1 must occur on some
    edge (gaps are rejected rather than silently compacted).
    """
    pairs: list[tuple[int, int]] = []
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, f"negative vertex id in {line!r}")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        pairs.append((u, v))
        max_id = max(max_id, u, v)
    g = Graph(max_id + 1, pairs)
    for v in range(g.n):
        if g.degree(v) == 0:
            raise GraphError(f"vertex id gap: {v} appears on no edge")
    return g


def dump_edge_list(g: Graph) -> str:
    """Edge-list text, one "u v" per line, ascending lexicographic order."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(len(a) for a in g.adj)


def prune_high_high_edges(g: Graph, d: int) -> Graph:
    """Delete edges whose endpoints both currently exceed degree d.

    Scans edges in ascending lexicographic order. Degrees only decrease, so
    an edge that once fails the both-endpoints-above-d test fails forever;
    a single forward pass therefore reaches the same fixpoint as repeatedly
    rescanning from the start after each deletion.

    The result keeps minimum degree >= d and every surviving edge has an
    endpoint of degree exactly d.
    """
    if min_degree(g) < d:
        raise GraphError(f"minimum degree {min_degree(g)} below d={d}")
    deg = [g.degree(v) for v in range(g.n)]
    kept: list[tuple[int, int]] = []
    for u, v in g.edges():
        if deg[u] > d and deg[v] > d:
            deg[u] -= 1
            deg[v] -= 1
        else:
            kept.append((u, v))
    return Graph(g.n, kept)
