"""1-of-N string transfer over erasure broadcast channels.

Thin wrapper over the C++ core: closed-form capacities and rate regions,
seeded protocol simulation, and exact tiny-instance leakage enumeration.
"""

from ._core import (
    __version__,
    achievable_limit,
    capacities,
    exact_leakage_oracle,
    ih_exhaustive_check,
    monte_carlo,
    pa_bound,
    rate_region,
    renyi2,
    run_session,
    subset_codec,
)

__all__ = [
    "__version__",
    "achievable_limit",
    "capacities",
    "exact_leakage_oracle",
    "ih_exhaustive_check",
    "monte_carlo",
    "pa_bound",
    "rate_region",
    "renyi2",
    "run_session",
    "subset_codec",
]
