"""Star factor objects, the text format, and final-assembly helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError


@dataclass(frozen=True)
class StarFactor:
    """Partition of the vertex set into stars: center -> sorted leaves."""

    stars: dict[int, tuple[int, ...]]

    @staticmethod
    def from_sets(stars: dict[int, set[int]]) -> "StarFactor":
        return StarFactor({c: tuple(sorted(ls)) for c, ls in sorted(stars.items())})

    def centers(self) -> list[int]:
        return sorted(self.stars)

    def min_star(self) -> int:
        return min((len(ls) for ls in self.stars.values()), default=0)

    def max_star(self) -> int:
        return max((len(ls) for ls in self.stars.values()), default=0)

    def to_text(self) -> str:
        """One star per line, "center: leaf leaf ...", centers ascending."""
        lines = []
        for c in sorted(self.stars):
            lines.append(f"{c}: " + " ".join(str(u) for u in self.stars[c]))
        return "\n".join(lines) + ("\n" if lines else "")

    @staticmethod
    def from_text(text: str) -> "StarFactor":
        stars: dict[int, tuple[int, ...]] = {}
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, _, tail = line.partition(":")
            try:
                center = int(head)
                leaves = tuple(sorted(int(t) for t in tail.split()))
            except ValueError:
                raise GraphError(f"bad star-factor line {line_no}: {raw!r}") from None
            if center in stars:
                raise GraphError(f"duplicate center {center} at line {line_no}")
            stars[center] = leaves
        return StarFactor(stars)


@dataclass
class AssemblyStats:
    attached: int = 0
    promotions: int = 0
    demotions: int = 0
    steals: int = 0
    restructures: int = 0

    def repairs(self) -> int:
        return self.promotions + self.demotions + self.steals + self.restructures


def assemble(
    g: Graph,
    stars: dict[int, set[int]],
    unassigned: set[int],
    protected: frozenset[int] = frozenset(),
) -> tuple[StarFactor, AssemblyStats]:
    """Attach unassigned vertices and repair degenerate stars.

    Unassigned vertices go to their lowest-id neighboring center. A vertex
    with no center neighbor promotes a neighbor; a leafless center is
    demoted into a neighboring star or repaired by stealing a leaf.
    `protected` leaves (pre-assigned ones) are stolen only as a last resort.
    Requires minimum degree >= 1.
    """
    stats = AssemblyStats()
    leaf_of: dict[int, int] = {}
    for c, ls in stars.items():
        for u in ls:
            leaf_of[u] = c

    deferred: list[int] = []
    for u in sorted(unassigned):
        c = min((w for w in g.adj[u] if w in stars), default=None)
        if c is None:
            deferred.append(u)
        else:
            stars[c].add(u)
            leaf_of[u] = c
            stats.attached += 1

    pending = list(deferred)
    while pending:
        u = pending.pop(0)
        if u in stars or u in leaf_of:
            continue
        c = min((w for w in g.adj[u] if w in stars), default=None)
        if c is not None:
            stars[c].add(u)
            leaf_of[u] = c
            stats.attached += 1
            continue
        if not g.adj[u]:
            raise GraphError(f"vertex {u} is isolated; no star factor exists")
        w = next((x for x in g.adj[u] if x not in protected), g.adj[u][0])
        if w in leaf_of:
            cw = leaf_of[w]
            if len(stars[cw]) >= 2:
                stars[cw].discard(w)
            else:
                # w was the sole leaf of cw: fold cw into w's new star
                del stars[cw]
                del leaf_of[w]
                stars.setdefault(w, set()).add(cw)
                leaf_of[cw] = w
                stats.restructures += 1
            stars.setdefault(w, set()).add(u)
            leaf_of.pop(w, None)
            leaf_of[u] = w
            stats.promotions += 1
        else:
            # w is itself unassigned: promote it with u as its first leaf
            stars[w] = {u}
            leaf_of[u] = w
            stats.promotions += 1

    # repair leafless centers
    leafless = sorted(c for c in stars if not stars[c])
    while leafless:
        c = leafless.pop(0)
        if c not in stars or stars[c]:
            continue
        c2 = min((w for w in g.adj[c] if w in stars and w != c), default=None)
        if c2 is not None:
            del stars[c]
            stars[c2].add(c)
            leaf_of[c] = c2
            stats.demotions += 1
            continue
        # all neighbors are leaves of other stars
        candidates = [w for w in g.adj[c] if w in leaf_of]
        if not candidates:
            raise GraphError(f"cannot repair leafless center {c}")
        big = [w for w in candidates if len(stars[leaf_of[w]]) >= 2]
        pick_from = [w for w in big if w not in protected] or big
        if pick_from:
            u = pick_from[0]
            cu = leaf_of[u]
            stars[cu].discard(u)
            stars[c].add(u)
            leaf_of[u] = c
            stats.steals += 1
        else:
            # every neighbor is a sole leaf: merge c, that leaf's center,
            # and the leaf into one star centered on the leaf
            u = candidates[0]
            cu = leaf_of[u]
            del stars[c]
            del stars[cu]
            del leaf_of[u]
            stars[u] = {c, cu}
            leaf_of[c] = u
            leaf_of[cu] = u
            stats.restructures += 1
            if cu in leafless:
                leafless.remove(cu)

    return StarFactor.from_sets(stars), stats
