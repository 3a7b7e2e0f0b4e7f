"""Run-time settings shared by the CLI and the experiment scripts."""
from __future__ import annotations

import os
from dataclasses import dataclass

DEPTH_ENV = "INVORDER_MAX_DEPTH"


@dataclass(frozen=True)
class OrderConfig:
    depth_cap: int = 4
    eigen_tol: float = 1e-8
    approx_digits: int = 15
    jobs: int = 1

    def __post_init__(self):
        if self.depth_cap < 1:
            raise ValueError("depth cap must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "OrderConfig":
        env = os.environ if environ is None else environ
        raw = env.get(DEPTH_ENV)
        kw = {}
        if raw:
            try:
                kw["depth_cap"] = int(raw)
            except ValueError:
                raise ValueError(f"{DEPTH_ENV}={raw!r} is not an integer") from None
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)
