"""Enumeration guards shared by the brute-force oracles and searches.

Every exhaustive enumeration in this package is capped by an explicit
budget so that oracle computations terminate predictably.  The default
codeword-enumeration budget is 2**24 elements; it can be overridden
globally through the GRAPHREAL_GUARD_BITS environment variable.
"""

from __future__ import annotations

import os

DEFAULT_GUARD_BITS = 24
GUARD_ENV_VAR = "GRAPHREAL_GUARD_BITS"


class GuardExceeded(Exception):
    """An enumeration would exceed its configured budget."""


def guard_bits(override: int | None = None) -> int:
    """Resolve the enumeration budget, in bits.

    Precedence: explicit argument, then GRAPHREAL_GUARD_BITS, then the
    built-in default of 24.
    """
    if override is not None:
        if override <= 0:
            raise ValueError(f"guard bits must be positive, got {override}")
        return override
    env = os.environ.get(GUARD_ENV_VAR)
    if env is not None:
        try:
            bits = int(env)
        except ValueError as exc:
            raise ValueError(f"{GUARD_ENV_VAR} must be an integer, got {env!r}") from exc
        if bits <= 0:
            raise ValueError(f"{GUARD_ENV_VAR} must be positive, got {bits}")
        return bits
    return DEFAULT_GUARD_BITS


def check_enumeration(count: int, bits: int | None = None, what: str = "enumeration") -> None:
    """Raise GuardExceeded if count does not fit in the configured budget."""
    budget = 1 << guard_bits(bits)
    if count > budget:
        raise GuardExceeded(f"{what} needs {count} elements, budget is 2**{guard_bits(bits)}")
