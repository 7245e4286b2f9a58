"""Run-time limits shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .orbits import DEFAULT_BUDGET

SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class Limits:
    orbit_budget: int = DEFAULT_BUDGET
    chartable_cap: int = 12
    # n beyond this makes brute-force oracles impractically slow
    oracle_cap: int = 6

    def with_budget(self, budget: int | None) -> "Limits":
        if budget is None:
            return self
        if budget < 1:
            raise ValueError("budget must be positive")
        return replace(self, orbit_budget=budget)


DEFAULT_LIMITS = Limits()
