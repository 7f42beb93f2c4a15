"""Run-wide knobs shared by the solvers and the command line."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class RunConfig:
    """Worker count, search limits and the initial cost ``omega``.

    ``max_order`` guards the exhaustive searches (domination, independence,
    k-radius, subset scans). ``game_budget`` caps the number of
    Cops-and-Robbers states a single table may hold.
    """

    threads: int = 1
    max_order: int = 32
    game_budget: int = 50_000_000
    omega: int = 1

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.omega < 1:
            raise ValueError("omega must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        base = cls(
            threads=_env_int("THROTTLE_THREADS", 1),
            game_budget=_env_int("THROTTLE_BUDGET", cls.game_budget),
        )
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(base, **overrides)


DEFAULT = RunConfig()
