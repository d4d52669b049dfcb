"""Run-time knobs: effort budgets, size caps, seeds.

The CLI reads fallbacks from the environment variables XX_FACTOR_BUDGET,
XX_BIT_CAP and XX_SEED, with command-line flags taking precedence.  Library
callers pass a Config explicitly or rely on DEFAULT_CONFIG.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

ENV_FACTOR_BUDGET = "XX_FACTOR_BUDGET"
ENV_BIT_CAP = "XX_BIT_CAP"
ENV_SEED = "XX_SEED"


@dataclass(frozen=True)
class Config:
    #: Pollard-rho iteration budget before factorize gives up with ResourceError.
    factor_budget: int = 500_000
    #: Bit-size cap for operations that materialise a^a-scale integers.
    bit_cap: int = 1 << 20
    #: Seed for the randomised parts of factorization (reproducible runs).
    seed: int = 0x5E1F
    #: Default width of certificate isolating intervals.
    bisect_width: Fraction = Fraction(1, 10**9)
    #: Hard stop for the bisection loop.
    max_bisect_steps: int = 10_000

    @classmethod
    def from_env(cls, env: dict | None = None) -> Config:
        env = dict(os.environ) if env is None else env
        kwargs = {}
        if ENV_FACTOR_BUDGET in env:
            kwargs["factor_budget"] = int(env[ENV_FACTOR_BUDGET])
        if ENV_BIT_CAP in env:
            kwargs["bit_cap"] = int(env[ENV_BIT_CAP])
        if ENV_SEED in env:
            kwargs["seed"] = int(env[ENV_SEED])
        return cls(**kwargs)


DEFAULT_CONFIG = Config()
