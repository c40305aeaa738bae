"""Star factors under a minimum-degree bound only.

Pipeline: prune edges between two above-degree-d endpoints, force very
high-degree vertices to be centers with privately reserved leaves, sample
the reserved set, iteratively classify the rest into centers and leaves
with time labels, sample late centers from the free remainder, build the
time-respecting assignment graph, quota-match, and absorb leftovers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .bmatch import BipGraph, QuotaAssignment, max_uniform_quota, quota_matching
from .factor import StarFactor, assemble
from .graph import Graph, GraphError, min_degree, prune_high_high_edges
from .resample import EventSystem, ResampleExhausted, resample_until_good

#: minimum degree accepted by the pipeline
MIN_GENERAL_DEGREE = 8

CLAMP_BIAS = 0.5


class PhaseError(RuntimeError):
    def __init__(self, phase: str, message: str):
        super().__init__(f"[{phase}] {message}")
        self.phase = phase


class AuditError(AssertionError):
    def __init__(self, clause: str, message: str):
        super().__init__(f"assignment-graph audit failed ({clause}): {message}")
        self.clause = clause


@dataclass(frozen=True)
class GeneralConfig:
    d: int
    h_threshold: float  # (1/10) d^{4/3} / (ln d)^{1/3}
    high_cutoff: float  # effective high-degree threshold, max(h, d+1)
    leaf_rule_cap: float  # D = d^{2/3} (ln d)^{1/3}
    center_rule_cap: float  # d/6
    special_bias: float  # 1/2
    special_min: int  # effective per-center reserved-leaf minimum
    keep_min: float  # minimum surviving neighborhood outside the reserved set
    free_bias_formula: float  # 20 ln d / d
    free_bias: float  # effective late-center probability (clamped into (0,1))
    late_cap_formula: float  # 2 * p * h = 4 d^{1/3} (ln d)^{2/3}
    quota_target: int  # floor((1/16) d^{1/3} / (ln d)^{1/3})
    high_quota: int  # max(1, floor(h/d))
    relax: float = 1.0
    seed: int = 0
    max_rounds: int | None = None
    bias_clamped: bool = False

    @classmethod
    def from_degree(
        cls,
        d: int,
        seed: int = 0,
        relax: float = 1.0,
        max_rounds: int | None = None,
    ) -> "GeneralConfig":
        if d < MIN_GENERAL_DEGREE:
            raise ValueError(
                f"d={d} below the general pipeline's minimum degree {MIN_GENERAL_DEGREE}"
            )
        if not 0 < relax <= 1.0:
            raise ValueError("relax factor must be in (0, 1]")
        ln = math.log(d)
        h = 0.1 * d ** (4.0 / 3.0) / ln ** (1.0 / 3.0)
        p = 20.0 * ln / d
        clamped = p >= 1.0
        return cls(
            d=d,
            h_threshold=h,
            high_cutoff=max(h, d + 1.0),
            leaf_rule_cap=d ** (2.0 / 3.0) * ln ** (1.0 / 3.0),
            center_rule_cap=d / 6.0,
            special_bias=0.5,
            special_min=max(1, math.floor(relax * d ** (1.0 / 3.0) / (25.0 * ln ** (1.0 / 3.0)))),
            keep_min=relax * d / 3.0,
            free_bias_formula=p,
            free_bias=min(p, CLAMP_BIAS),
            late_cap_formula=2.0 * p * h,
            quota_target=math.floor(d ** (1.0 / 3.0) / (16.0 * ln ** (1.0 / 3.0))),
            high_quota=max(1, math.floor(h / d)),
            relax=relax,
            seed=seed,
            max_rounds=max_rounds,
            bias_clamped=clamped,
        )


@dataclass
class PhaseState:
    """Evolving partition during the classification phase."""

    graph: Graph  # pruned graph minus the reserved set
    high: frozenset[int]
    special: frozenset[int]
    centers: set[int] = field(default_factory=set)  # includes high
    leaves: set[int] = field(default_factory=set)
    free: set[int] = field(default_factory=set)
    late: set[int] = field(default_factory=set)  # subset of free
    labels: dict[int, int] = field(default_factory=dict)
    t0: int = 0


def split_high(gp: Graph, cfg: GeneralConfig) -> tuple[frozenset[int], dict[int, frozenset[int]], dict]:
    """Force high-degree vertices to be centers with private reserved neighbors.

    Returns (high set, per-center reserved blocks, info). Blocks are pairwise
    disjoint; their union is the reserved pool S'. Requires a pruned input:
    neighbors of high vertices must have degree exactly d.
    """
    high = frozenset(v for v in range(gp.n) if gp.degree(v) >= cfg.high_cutoff)
    info: dict = {"fallbacks": [], "quota_used": 0}
    if not high:
        return high, {}, info

    pool = sorted(set().union(*(gp.neighbor_set(v) for v in high)))
    for u in pool:
        if gp.degree(u) != cfg.d:
            raise GraphError(
                f"neighbor {u} of a high-degree vertex has degree {gp.degree(u)}, "
                f"expected exactly {cfg.d} (input not pruned?)"
            )
    pool_index = {u: i for i, u in enumerate(pool)}
    left = sorted(high)
    bip = BipGraph(
        len(left),
        len(pool),
        ([pool_index[u] for u in gp.adj[v]] for v in left),
    )
    quota = cfg.high_quota
    result = quota_matching(bip, quota)
    if not isinstance(result, QuotaAssignment):
        info["fallbacks"].append("high_quota")
        quota = max_uniform_quota(bip)
        result = quota_matching(bip, quota) if quota >= 1 else QuotaAssignment({}, 0)
        assert isinstance(result, QuotaAssignment)
    info["quota_used"] = quota

    blocks: dict[int, set[int]] = {v: set() for v in left}
    for r, l in result.owner.items():
        blocks[left[l]].add(pool[r])
    return high, {v: frozenset(b) for v, b in blocks.items()}, info


def choose_special(
    gp: Graph,
    high: frozenset[int],
    blocks: dict[int, frozenset[int]],
    cfg: GeneralConfig,
    seed: int,
) -> tuple[frozenset[int], int]:
    """Sample the reserved set S from the pooled blocks at bias 1/2.

    Constraints discharged by resampling: every high center keeps at least
    `special_min` reserved leaves from its own block, and every non-high
    vertex keeps at least `keep_min` neighbors outside S.
    """
    pool = sorted(set().union(*blocks.values())) if blocks else []
    if not pool:
        return frozenset(), 0
    index = {u: i for i, u in enumerate(pool)}
    pool_set = set(pool)
    system = EventSystem(len(pool))

    for v in sorted(blocks):
        block = sorted(blocks[v])
        if not block:
            continue
        need = min(cfg.special_min, len(block))
        system.add(
            [index[u] for u in block],
            lambda vals, need=need: sum(vals) < need,
        )

    for v in range(gp.n):
        if v in high:
            continue
        scoped = [u for u in gp.adj[v] if u in pool_set]
        if not scoped:
            continue
        deg = gp.degree(v)
        if deg - len(scoped) >= cfg.keep_min:
            continue  # can never be violated
        system.add(
            [index[u] for u in scoped],
            lambda vals, deg=deg, lim=cfg.keep_min: deg - sum(vals) < lim,
        )

    try:
        assignment = resample_until_good(system, cfg.special_bias, seed, cfg.max_rounds)
    except ResampleExhausted as exc:
        raise PhaseError(
            "reserved-set sampling",
            f"{exc}; the degree is likely too small for the strict thresholds "
            "(try a relax factor)",
        ) from exc
    special = frozenset(pool[i] for i in assignment.selected())
    return special, assignment.rounds_used


def run_rules(gpp: Graph, high: frozenset[int], special: frozenset[int], cfg: GeneralConfig) -> PhaseState:
    """Classify vertices into centers and leaves until no rule applies.

    Scan ids ascending, leaf rule before center rule at each vertex, and
    repeat full scans until a pass makes no change (the order is an
    implementation choice; the fixpoint conditions do not depend on it).
    Each classified vertex receives the next time label.
    """
    state = PhaseState(graph=gpp, high=high, special=special)
    state.centers = set(high)
    unclassified = [
        v for v in range(gpp.n) if v not in special and v not in high
    ]
    t = 0
    changed = True
    while changed:
        changed = False
        still: list[int] = []
        for v in unclassified:
            non_center = sum(1 for u in gpp.adj[v] if u not in state.centers)
            if non_center <= cfg.leaf_rule_cap:
                state.leaves.add(v)
                t += 1
                state.labels[v] = t
                changed = True
                continue
            non_leaf = sum(1 for u in gpp.adj[v] if u not in state.leaves)
            if non_leaf <= cfg.center_rule_cap:
                state.centers.add(v)
                t += 1
                state.labels[v] = t
                changed = True
                continue
            still.append(v)
        unclassified = still
    state.free = set(unclassified)
    state.t0 = t
    return state


def rules_fixpoint_check(state: PhaseState, cfg: GeneralConfig) -> None:
    """Every free vertex must fail both classification rules."""
    gpp = state.graph
    for v in state.free:
        non_center = sum(1 for u in gpp.adj[v] if u not in state.centers)
        non_leaf = sum(1 for u in gpp.adj[v] if u not in state.leaves)
        if non_center <= cfg.leaf_rule_cap or non_leaf <= cfg.center_rule_cap:
            raise PhaseError("rules", f"free vertex {v} still triggers a rule")


def effective_late_cap(state: PhaseState, cfg: GeneralConfig) -> int:
    """Upper bound on late-center neighbors per vertex.

    The formula value 2*p*h presumes the post-classification max degree is
    below h; below that regime the cap is recomputed from the actual
    degrees so it stays satisfiable, scaled by 1/relax when relaxed.
    """
    gpp = state.graph
    delta = max(
        (gpp.degree(v) for v in range(gpp.n) if v not in state.high and v not in state.special),
        default=0,
    )
    cap = 2.0 * cfg.free_bias * max(delta, cfg.h_threshold) / cfg.relax
    return max(1, math.ceil(cap))


def choose_late_centers(state: PhaseState, cfg: GeneralConfig, seed: int) -> tuple[int, int]:
    """Sample late centers T from the free set and extend the time labels.

    Every free vertex must end with a neighbor among centers or late
    centers, and no vertex may see more than the late cap of late-center
    neighbors. Free vertices outside T get labels above t0; T gets the
    largest labels. Returns (resampling rounds, cap used).
    """
    gpp = state.graph
    cap = effective_late_cap(state, cfg)
    free = sorted(state.free)
    if not free:
        return 0, cap
    index = {v: i for i, v in enumerate(free)}
    free_set = state.free
    system = EventSystem(len(free))

    for v in free:
        if any(u in state.centers for u in gpp.adj[v]):
            continue
        scoped = [u for u in gpp.adj[v] if u in free_set]
        if not scoped:
            raise PhaseError(
                "late-center sampling",
                f"free vertex {v} has no possible center neighbor",
            )
        system.add([index[u] for u in scoped], lambda vals: not any(vals))

    for v in range(gpp.n):
        if v in state.high or v in state.special:
            continue
        scoped = [u for u in gpp.adj[v] if u in free_set]
        if len(scoped) <= cap:
            continue
        system.add([index[u] for u in scoped], lambda vals, cap=cap: sum(vals) > cap)

    try:
        assignment = resample_until_good(system, cfg.free_bias, seed, cfg.max_rounds)
    except ResampleExhausted as exc:
        raise PhaseError("late-center sampling", str(exc)) from exc

    state.late = {free[i] for i in assignment.selected()}
    t = state.t0
    for v in free:
        if v not in state.late:
            t += 1
            state.labels[v] = t
    for v in free:
        if v in state.late:
            t += 1
            state.labels[v] = t
    return assignment.rounds_used, cap


def late_conditions_check(state: PhaseState, cap: int) -> None:
    gpp = state.graph
    for v in state.free:
        if not any(u in state.centers or u in state.late for u in gpp.adj[v]):
            raise PhaseError("late-center sampling", f"free vertex {v} left uncovered")
    for v in range(gpp.n):
        if v in state.high or v in state.special:
            continue
        if sum(1 for u in gpp.adj[v] if u in state.late) > cap:
            raise PhaseError("late-center sampling", f"vertex {v} exceeds the late cap")


def build_assignment_graph(
    state: PhaseState, cfg: GeneralConfig, late_cap: int
) -> tuple[BipGraph, list[int], list[int]]:
    """Time-respecting bipartite graph from prospective centers to earlier-
    labeled prospective leaves, with its structural degree audits."""
    gpp = state.graph
    early_centers = state.centers - state.high
    left = sorted(early_centers | state.late)
    right = sorted(state.leaves | (state.free - state.late))
    right_set = set(right)
    right_index = {v: i for i, v in enumerate(right)}
    labels = state.labels
    adj = [
        [right_index[u] for u in gpp.adj[v] if u in right_set and labels[u] < labels[v]]
        for v in left
    ]
    bip = BipGraph(len(left), len(right), adj)

    # degree audits on both sides
    left_set = set(left)
    left_adj_of_right: dict[int, list[int]] = {r: [] for r in range(len(right))}
    for li, rs in enumerate(bip.adj):
        for r in rs:
            left_adj_of_right[r].append(li)
    for ri, u in enumerate(right):
        partners = left_adj_of_right[ri]
        to_early = sum(1 for li in partners if left[li] in early_centers)
        to_late = sum(1 for li in partners if left[li] in state.late)
        if u in state.leaves:
            if to_early > cfg.leaf_rule_cap:
                raise AuditError(
                    "leaf-to-early-center degree",
                    f"leaf {u} reaches {to_early} early centers (cap {cfg.leaf_rule_cap})",
                )
            if to_late > late_cap:
                raise AuditError(
                    "leaf-to-late-center degree",
                    f"leaf {u} reaches {to_late} late centers (cap {late_cap})",
                )
        else:  # free, not late
            if to_early != 0:
                raise AuditError(
                    "free-leaf partners",
                    f"unclassified leaf {u} reaches an early center",
                )
            if to_late > late_cap:
                raise AuditError(
                    "free-leaf-to-late-center degree",
                    f"unclassified leaf {u} reaches {to_late} late centers (cap {late_cap})",
                )
    for li, v in enumerate(left):
        deg = len(bip.adj[li])
        if v in early_centers and deg < cfg.center_rule_cap * cfg.relax:
            raise AuditError(
                "early-center degree",
                f"center {v} has only {deg} candidate leaves "
                f"(need >= {cfg.center_rule_cap * cfg.relax})",
            )
        if v in state.late and deg <= cfg.leaf_rule_cap * cfg.relax / 2.0:
            raise AuditError(
                "late-center degree",
                f"late center {v} has only {deg} candidate leaves "
                f"(need > {cfg.leaf_rule_cap * cfg.relax / 2.0})",
            )
    return bip, left, right


def expansion_spot_check(
    bip: BipGraph, quota: int, samples: int = 1000, seed: int = 0
) -> bool:
    """Random left subsets X must expand: |N(X)| >= quota * |X|."""
    if bip.n_left == 0 or quota < 1:
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        k = rng.randint(1, bip.n_left)
        subset = rng.sample(range(bip.n_left), k)
        if len(bip.neighborhood(subset)) < quota * len(subset):
            return False
    return True


@dataclass
class GeneralResult:
    """Everything the pipeline produced, for auditing and reporting."""

    config: GeneralConfig
    pruned: Graph
    blocks: dict[int, frozenset[int]]
    state: PhaseState
    bip: BipGraph
    left: list[int]
    right: list[int]
    late_cap: int
    factor: StarFactor
    report: dict


def run_general_pipeline(g: Graph, cfg: GeneralConfig) -> GeneralResult:
    d = cfg.d
    if min_degree(g) < d:
        raise GraphError(f"minimum degree {min_degree(g)} below d={d}")
    gp = prune_high_high_edges(g, d)

    high, blocks, high_info = split_high(gp, cfg)
    special, special_rounds = choose_special(gp, high, blocks, cfg, cfg.seed)
    gpp = gp.remove_vertices(special)

    state = run_rules(gpp, high, special, cfg)
    rules_fixpoint_check(state, cfg)

    late_rounds, late_cap = choose_late_centers(state, cfg, cfg.seed + 1)
    late_conditions_check(state, late_cap)

    bip, left, right = build_assignment_graph(state, cfg, late_cap)

    fallbacks = list(high_info["fallbacks"])
    quota_requested = max(1, cfg.quota_target)
    if bip.n_left:
        result = quota_matching(bip, quota_requested)
        if not isinstance(result, QuotaAssignment):
            fallbacks.append("quota_matching")
            achieved = max_uniform_quota(bip)
            result = (
                quota_matching(bip, achieved) if achieved >= 1 else QuotaAssignment({}, 0)
            )
            quota_achieved = achieved
        else:
            quota_achieved = quota_requested
    else:
        result = QuotaAssignment({}, 0)
        quota_achieved = 0

    stars: dict[int, set[int]] = {}
    for v in high:
        stars[v] = set(blocks.get(v, frozenset()) & special)
    for v in left:
        stars[v] = set()
    assert isinstance(result, QuotaAssignment)
    for r, l in result.owner.items():
        stars[left[l]].add(right[r])
    unassigned = set(right) - {right[r] for r in result.owner}
    factor, stats = assemble(g, stars, unassigned, protected=special)

    if cfg.bias_clamped:
        fallbacks.append("late_bias_clamped")
    report = {
        "mode": "general",
        "n": g.n,
        "d": d,
        "h": cfg.h_threshold,
        "high_cutoff": cfg.high_cutoff,
        "leaf_rule_cap": cfg.leaf_rule_cap,
        "p_free": cfg.free_bias_formula,
        "free_bias": cfg.free_bias,
        "late_cap": late_cap,
        "high": len(high),
        "special": len(special),
        "centers_early": len(state.centers - high),
        "leaves_ruled": len(state.leaves),
        "free": len(state.free),
        "late": len(state.late),
        "t0": state.t0,
        "high_quota": high_info["quota_used"],
        "quota_requested": quota_requested,
        "quota_achieved": quota_achieved,
        "special_rounds": special_rounds,
        "late_rounds": late_rounds,
        "min_star": factor.min_star(),
        "max_star": factor.max_star(),
        "star_count": len(factor.stars),
        "fallbacks": fallbacks,
        "repairs": stats.repairs(),
        "relax": cfg.relax,
        "seed": cfg.seed,
    }
    return GeneralResult(
        config=cfg,
        pruned=gp,
        blocks=blocks,
        state=state,
        bip=bip,
        left=left,
        right=right,
        late_cap=late_cap,
        factor=factor,
        report=report,
    )


def star_factor_general(g: Graph, cfg: GeneralConfig) -> tuple[StarFactor, dict]:
    result = run_general_pipeline(g, cfg)
    return result.factor, result.report


def special_conditions_check(
    gp: Graph,
    high: frozenset[int],
    blocks: dict[int, frozenset[int]],
    special: frozenset[int],
    cfg: GeneralConfig,
) -> None:
    """Post-hoc audit of the reserved-set constraints at effective thresholds."""
    for v, block in blocks.items():
        need = min(cfg.special_min, len(block))
        if len(block & special) < need:
            raise PhaseError(
                "reserved-set audit", f"high center {v} kept too few reserved leaves"
            )
    for v in range(gp.n):
        if v in high:
            continue
        survivors = sum(1 for u in gp.adj[v] if u not in special)
        if survivors < cfg.keep_min:
            raise PhaseError(
                "reserved-set audit",
                f"vertex {v} keeps only {survivors} neighbors outside the reserved set",
            )
