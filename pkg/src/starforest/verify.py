"""Ground truth: star-factor validation, exact minimum dominating sets, and
the quadratic-residue lower-bound demonstration."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .factor import StarFactor
from .generators import paley_bipartite
from .graph import Graph


@dataclass
class ValidationReport:
    valid: bool
    violations: list[tuple[str, object]]
    min_star: int
    max_star: int
    star_count: int
    coverage_gap: frozenset[int]


def validate_star_factor(g: Graph, sf: StarFactor, min_size: int = 1) -> ValidationReport:
    """Check partition, coverage, edge membership, and minimum star size.

    Violations are data, not errors; the report enumerates all of them.
    """
    violations: list[tuple[str, object]] = []
    seen: dict[int, int] = {}
    for c, leaves in sf.stars.items():
        if not 0 <= c < g.n:
            violations.append(("center_out_of_range", c))
            continue
        if not leaves:
            violations.append(("empty_star", c))
        if c in seen:
            violations.append(("center_reused", c))
        seen[c] = c
        for u in leaves:
            if not 0 <= u < g.n:
                violations.append(("leaf_out_of_range", u))
                continue
            if u in seen:
                violations.append(("vertex_reused", u))
            seen[u] = c
            if not g.has_edge(c, u):
                violations.append(("not_an_edge", (c, u)))
            if u in sf.stars:
                violations.append(("leaf_is_center", u))
    gap = frozenset(v for v in range(g.n) if v not in seen)
    for c, leaves in sf.stars.items():
        if len(leaves) < min_size:
            violations.append(("small_star", c))
    valid = not violations and not gap
    return ValidationReport(
        valid=valid,
        violations=violations,
        min_star=sf.min_star(),
        max_star=sf.max_star(),
        star_count=len(sf.stars),
        coverage_gap=gap,
    )


@dataclass
class DomSetResult:
    size: int
    witness: frozenset[int]
    nodes_explored: int
    exact: bool


def _greedy_dominating(closed: list[int], full: int) -> list[int]:
    dom = 0
    chosen: list[int] = []
    n = len(closed)
    while dom != full:
        best_v, best_gain = -1, -1
        for v in range(n):
            gain = bin(closed[v] & ~dom & full).count("1")
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        dom |= closed[best_v]
    return chosen


def min_dominating_set(g: Graph, budget: int = 5_000_000) -> DomSetResult:
    """Exact minimum dominating set by branch and bound over bitmasks.

    Branches on an undominated vertex with the fewest candidate dominators
    (candidates ordered by fresh coverage), bounds with a coverage-count
    lower bound, and starts from a greedy incumbent. Exactness holds when
    the node budget was not exhausted.
    """
    n = g.n
    if n == 0:
        return DomSetResult(0, frozenset(), 0, True)
    full = (1 << n) - 1
    closed = [(1 << v) | sum(1 << u for u in g.adj[v]) for v in range(n)]
    max_cov = max(bin(m).count("1") for m in closed)

    incumbent = _greedy_dominating(closed, full)
    best_size = len(incumbent)
    best_witness = list(incumbent)
    nodes = 0
    exhausted = False

    def dfs(dom: int, chosen: list[int]) -> None:
        nonlocal best_size, best_witness, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        if dom == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_witness = list(chosen)
            return
        undom = ~dom & full
        lb = -(-bin(undom).count("1") // max_cov)
        if len(chosen) + lb >= best_size:
            return
        # branch on the undominated vertex with the fewest dominators
        pick, pick_cands = -1, None
        mask = undom
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            cands = [v] + [u for u in g.adj[v]]
            if pick_cands is None or len(cands) < len(pick_cands):
                pick, pick_cands = v, cands
                if len(cands) <= 2:
                    break
        assert pick_cands is not None
        pick_cands.sort(key=lambda c: -bin(closed[c] & undom).count("1"))
        for c in pick_cands:
            dfs(dom | closed[c], chosen + [c])

    dfs(0, [])
    return DomSetResult(best_size, frozenset(best_witness), nodes, not exhausted)


def is_dominating(g: Graph, witness: frozenset[int]) -> bool:
    covered = set(witness)
    for v in witness:
        covered.update(g.adj[v])
    return len(covered) == g.n


def paley_domination_check(p: int, budget: int = 20_000_000) -> tuple[int, float, bool]:
    """Exact domination number of the quadratic-residue bipartite graph,
    compared against the (1/3) log2 p lower-bound target."""
    g = paley_bipartite(p)
    result = min_dominating_set(g, budget=budget)
    if not result.exact:
        raise RuntimeError(f"budget exhausted computing gamma for p={p}")
    bound = math.log2(p) / 3.0
    return result.size, bound, result.size > bound
