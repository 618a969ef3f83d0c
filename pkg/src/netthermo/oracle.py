"""Exact big-integer microstate counts for desk-scale checks.

Everything here is computed with Python integers, so results are exact up
to the configured cap on ``R + K``. Beyond the cap use
:func:`netthermo.thermo.log_microstates`.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import CapExceededError, ValidationError

__all__ = [
    "DEFAULT_CAP",
    "PartitionDistribution",
    "oracle_cap",
    "microstates_exact",
    "partition_distribution",
    "equalization_error",
]

DEFAULT_CAP = 5000
CAP_ENV = "NETTHERMO_ORACLE_CAP"


def oracle_cap() -> int:
    """Current cap on ``R + K``; ``NETTHERMO_ORACLE_CAP`` overrides the default."""
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValidationError(f"{CAP_ENV} must be positive, got {cap}")
    return cap


def _check_cap(size: int, cap: Optional[int]) -> None:
    cap = oracle_cap() if cap is None else cap
    if size > cap:
        raise CapExceededError(
            f"R + K = {size} exceeds the exact-arithmetic cap {cap}; "
            "use log_microstates or raise the cap"
        )


def microstates_exact(links: int, states: int, cap: Optional[int] = None) -> int:
    """Number of multisets of size ``links`` over ``states``: C(R+K-1, R)."""
    if states < 1:
        raise ValidationError(f"states must be >= 1, got {states}")
    if links < 0:
        raise ValidationError(f"links must be >= 0, got {links}")
    _check_cap(links + states, cap)
    return math.comb(links + states - 1, links)


@dataclass(frozen=True)
class PartitionDistribution:
    """Exact multiplicity of every split of ``R`` links between two pools.

    Entry ``i`` of ``multiplicity`` counts the joint microstates with ``i``
    links in the left pool and ``R - i`` in the right one.
    """

    pool_states_left: int
    pool_states_right: int
    total_links: int
    multiplicity: Tuple[int, ...]
    log_multiplicity: Tuple[float, ...]
    argmax_links_left: int
    prediction_links_left: float
    total_log_multiplicity: float

    @property
    def total(self) -> int:
        return sum(self.multiplicity)

    def probabilities(self) -> Tuple[float, ...]:
        total = self.total
        # int / int is correctly rounded regardless of magnitude
        return tuple(m / total for m in self.multiplicity)

    def to_dict(self) -> dict:
        return {
            "pool_states_left": self.pool_states_left,
            "pool_states_right": self.pool_states_right,
            "total_links": self.total_links,
            "log_multiplicity": list(self.log_multiplicity),
            "argmax_links_left": self.argmax_links_left,
            "prediction_links_left": self.prediction_links_left,
            "total_log_multiplicity": self.total_log_multiplicity,
        }


def partition_distribution(
    k1: int, k2: int, links: int, cap: Optional[int] = None
) -> PartitionDistribution:
    if k1 < 1 or k2 < 1:
        raise ValidationError(f"pool sizes must be >= 1, got {k1}, {k2}")
    if links < 0:
        raise ValidationError(f"links must be >= 0, got {links}")
    _check_cap(links + k1 + k2, cap)

    # W(i, K) = C(i+K-1, i), built incrementally: W(i+1,K) = W(i,K)(i+K)/(i+1)
    left = [1] * (links + 1)
    right = [1] * (links + 1)
    for i in range(links):
        left[i + 1] = left[i] * (i + k1) // (i + 1)
        right[i + 1] = right[i] * (i + k2) // (i + 1)
    mult = tuple(left[i] * right[links - i] for i in range(links + 1))

    best = 0
    for i, m in enumerate(mult):
        if m > mult[best]:
            best = i
    return PartitionDistribution(
        pool_states_left=k1,
        pool_states_right=k2,
        total_links=links,
        multiplicity=mult,
        log_multiplicity=tuple(math.log(m) for m in mult),
        argmax_links_left=best,
        prediction_links_left=links * k1 / (k1 + k2),
        total_log_multiplicity=math.log(math.comb(links + k1 + k2 - 1, links)),
    )


def equalization_error(k1: int, k2: int, links: int, cap: Optional[int] = None) -> float:
    """``|R1*/R - K1/(K1+K2)|`` for the most probable split ``R1*``."""
    if links < 1:
        raise ValidationError("equalization error needs at least one link")
    dist = partition_distribution(k1, k2, links, cap)
    return abs(dist.argmax_links_left / links - k1 / (k1 + k2))
