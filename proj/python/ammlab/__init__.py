"""Automated-market-maker engine, taxonomy probe and scenario simulator."""

from ._ammlab import (
    Error,
    Pool,
    bonding_trade,
    builtin_pools,
    classify,
    lmsr_cost,
    lmsr_prices,
    load_pool,
    simulate,
    solve_stableswap_d,
)

__all__ = [
    "Error",
    "Pool",
    "bonding_trade",
    "builtin_pools",
    "classify",
    "lmsr_cost",
    "lmsr_prices",
    "load_pool",
    "simulate",
    "solve_stableswap_d",
]
