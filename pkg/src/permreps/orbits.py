"""Breadth-first orbit closure shared by the binary and colored families."""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable, TypeVar

State = TypeVar("State", bound=Hashable)

DEFAULT_BUDGET = 600_000


class OrbitBudgetExceeded(RuntimeError):
    pass


def bfs_closure(
    seed: State,
    neighbours: Callable[[State], Iterable[State]],
    budget: int = DEFAULT_BUDGET,
) -> set[State]:
    """All states reachable from ``seed``; raises once more than ``budget`` are found."""
    seen = {seed}
    frontier = deque([seed])
    while frontier:
        state = frontier.popleft()
        for nxt in neighbours(state):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise OrbitBudgetExceeded(f"orbit exceeds budget of {budget} elements")
                frontier.append(nxt)
    return seen


def split_into_orbits(
    states: Iterable[State], neighbours: Callable[[State], Iterable[State]]
) -> list[set[State]]:
    """Partition a closed set into orbits; orbits listed in order of their first element."""
    remaining = list(states)
    assigned: set = set()
    orbits = []
    for state in remaining:
        if state in assigned:
            continue
        orbit = bfs_closure(state, neighbours, budget=len(remaining) + 1)
        assigned |= orbit
        orbits.append(orbit)
    return orbits
