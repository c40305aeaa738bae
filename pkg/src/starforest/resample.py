"""Generic bad-event resampling engine.

Draw every variable as an independent biased coin, then repeatedly redraw
the scope of the lowest-indexed violated event until no event is violated
(Moser-Tardos style constructive resampling).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence


@dataclass(frozen=True)
class Event:
    """A bad event over a subset of variables.

    `predicate` receives the scoped values (in scope order) and returns
    True when the event is *violated*.
    """

    scope: tuple[int, ...]
    predicate: Callable[[tuple[bool, ...]], bool]


@dataclass
class EventSystem:
    variable_count: int
    events: list[Event] = field(default_factory=list)

    def __post_init__(self) -> None:
        for ev in self.events:
            if not ev.scope:
                raise ValueError("event scope must be nonempty")
            if min(ev.scope) < 0 or max(ev.scope) >= self.variable_count:
                raise ValueError("event scope out of range")

    def add(self, scope: Sequence[int], predicate: Callable[[tuple[bool, ...]], bool]) -> None:
        self.events.append(Event(tuple(sorted(scope)), predicate))
        ev = self.events[-1]
        if not ev.scope or min(ev.scope) < 0 or max(ev.scope) >= self.variable_count:
            raise ValueError("event scope out of range")


@dataclass
class Assignment:
    values: list[bool]
    rounds_used: int

    def selected(self) -> list[int]:
        return [i for i, v in enumerate(self.values) if v]


class ResampleExhausted(RuntimeError):
    """Round budget ran out with events still violated."""

    def __init__(self, rounds: int, violated: list[int]):
        super().__init__(
            f"resampling did not converge after {rounds} rounds; "
            f"{len(violated)} events still violated"
        )
        self.rounds = rounds
        self.violated = violated


def _violated(ev: Event, values: list[bool]) -> bool:
    return ev.predicate(tuple(values[i] for i in ev.scope))


def resample_until_good(
    system: EventSystem,
    bias: float,
    seed: int,
    max_rounds: int | None = None,
) -> Assignment:
    """Resample until no event is violated; deterministic in (system, bias, seed).

    Each round redraws the scope of the lowest-indexed violated event, in
    ascending variable order. Default round budget is
    50 * (variable_count + event_count).
    """
    if not 0.0 < bias < 1.0:
        raise ValueError(f"bias must be in (0,1), got {bias}")
    if max_rounds is None:
        max_rounds = 50 * (system.variable_count + len(system.events))
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")

    rng = random.Random(seed)
    values = [rng.random() < bias for _ in range(system.variable_count)]

    var_events: dict[int, list[int]] = {}
    for idx, ev in enumerate(system.events):
        for v in ev.scope:
            var_events.setdefault(v, []).append(idx)

    violated = {i for i, ev in enumerate(system.events) if _violated(ev, values)}
    rounds = 0
    while violated:
        if rounds >= max_rounds:
            raise ResampleExhausted(rounds, sorted(violated))
        target = min(violated)
        scope = system.events[target].scope
        for v in scope:
            values[v] = rng.random() < bias
        affected: set[int] = set()
        for v in scope:
            affected.update(var_events.get(v, ()))
        for j in affected:
            if _violated(system.events[j], values):
                violated.add(j)
            else:
                violated.discard(j)
        rounds += 1
    return Assignment(values, rounds)
