"""Star factors in d-regular graphs: randomized center sampling, event
discharge by resampling, quota matching, and leftover absorption."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bmatch import BipGraph, QuotaAssignment, max_uniform_quota, quota_matching
from .factor import StarFactor, assemble
from .graph import Graph, GraphError
from .resample import EventSystem, resample_until_good

#: smallest degree at which the center-sampling probability (2+2 ln d)/d < 1
MIN_REGULAR_DEGREE = 11

#: bias ceiling used when running below MIN_REGULAR_DEGREE with clamping
CLAMP_BIAS = 0.5


@dataclass(frozen=True)
class RegularConfig:
    d: int
    bias: float  # per-vertex center probability actually used
    center_cap: float  # max allowed center-neighbors per vertex (3 * bias * d)
    quota_target: int  # floor((d - 6 - 6 ln d) / (6 + 6 ln d)), may be <= 0
    seed: int = 0
    max_rounds: int | None = None
    bias_clamped: bool = False

    @classmethod
    def from_degree(
        cls,
        d: int,
        seed: int = 0,
        max_rounds: int | None = None,
        clamp_bias: bool = False,
    ) -> "RegularConfig":
        if d < 1:
            raise ValueError("degree must be positive")
        p = (2.0 + 2.0 * math.log(d)) / d
        clamped = False
        if p >= 1.0:
            if not clamp_bias:
                raise ValueError(
                    f"d={d} below minimum {MIN_REGULAR_DEGREE} for a valid "
                    "center-sampling probability; pass clamp_bias=True to run anyway"
                )
            p = CLAMP_BIAS
            clamped = True
        quota = math.floor((d - 6.0 - 6.0 * math.log(d)) / (6.0 + 6.0 * math.log(d)))
        return cls(
            d=d,
            bias=p,
            center_cap=3.0 * p * d,
            quota_target=quota,
            seed=seed,
            max_rounds=max_rounds,
            bias_clamped=clamped,
        )


def _check_regular(g: Graph, d: int) -> None:
    bad = [v for v in range(g.n) if g.degree(v) != d]
    if bad:
        raise GraphError(f"graph is not {d}-regular (vertex {bad[0]} has degree {g.degree(bad[0])})")


def _center_system(g: Graph, cfg: RegularConfig) -> EventSystem:
    """One variable per vertex; one event per vertex requiring
    0 < (center neighbors) <= center_cap."""
    system = EventSystem(g.n)
    cap = cfg.center_cap
    for v in range(g.n):
        system.add(g.adj[v], lambda vals, cap=cap: not (0 < sum(vals) <= cap))
    return system


def pick_centers_regular(g: Graph, cfg: RegularConfig) -> frozenset[int]:
    """Center set C with every vertex having 1..center_cap neighbors in C."""
    centers, _ = _pick_centers(g, cfg)
    return centers


def _pick_centers(g: Graph, cfg: RegularConfig) -> tuple[frozenset[int], int]:
    _check_regular(g, cfg.d)
    system = _center_system(g, cfg)
    assignment = resample_until_good(system, cfg.bias, cfg.seed, cfg.max_rounds)
    centers = frozenset(assignment.selected())
    for v in range(g.n):
        k = sum(1 for u in g.adj[v] if u in centers)
        assert 0 < k <= cfg.center_cap
    return centers, assignment.rounds_used


def star_factor_regular(g: Graph, cfg: RegularConfig) -> tuple[StarFactor, dict]:
    """Full pipeline: sample centers, quota-match leaves, absorb leftovers.

    Returns the factor plus a run report (quota requested/achieved,
    resampling rounds, star-size stats, fallbacks taken).
    """
    centers, rounds = _pick_centers(g, cfg)
    left = sorted(centers)
    right = sorted(set(range(g.n)) - centers)
    right_index = {v: i for i, v in enumerate(right)}
    bip = BipGraph(
        len(left),
        len(right),
        ([right_index[u] for u in g.adj[c] if u in right_index] for c in left),
    )

    fallbacks: list[str] = []
    quota_requested = max(1, cfg.quota_target)
    result = quota_matching(bip, quota_requested) if bip.n_left else QuotaAssignment({}, 0)
    if not isinstance(result, QuotaAssignment):
        fallbacks.append("quota_matching")
        achieved = max_uniform_quota(bip)
        result = (
            quota_matching(bip, achieved)
            if achieved >= 1
            else QuotaAssignment({}, 0)
        )
        assert isinstance(result, QuotaAssignment)
        quota_achieved = achieved
    else:
        quota_achieved = quota_requested if bip.n_left else 0

    stars: dict[int, set[int]] = {c: set() for c in left}
    for r, l in result.owner.items():
        stars[left[l]].add(right[r])
    unassigned = set(right) - {right[r] for r in result.owner}
    factor, stats = assemble(g, stars, unassigned)

    if cfg.bias_clamped:
        fallbacks.append("bias_clamped")
    report = {
        "mode": "regular",
        "n": g.n,
        "d": cfg.d,
        "bias": cfg.bias,
        "center_cap": cfg.center_cap,
        "centers": len(centers),
        "quota_requested": quota_requested,
        "quota_achieved": quota_achieved,
        "resample_rounds": rounds,
        "min_star": factor.min_star(),
        "max_star": factor.max_star(),
        "star_count": len(factor.stars),
        "fallbacks": fallbacks,
        "repairs": stats.repairs(),
        "seed": cfg.seed,
    }
    return factor, report
