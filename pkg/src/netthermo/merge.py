"""Merging two networks with disjoint node sets.

Nodes and links add; states do not. The merged net has
``(N1+N2)(N1+N2-1) = K1 + K2 + 2 N1 N2`` states, which is what drives the
entropy increase and the drop in intensity on merging.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import ValidationError
from .thermo import (
    Network,
    NetworkReport,
    entropy_planck,
    log_microstates,
    report,
)

__all__ = [
    "MergeReport",
    "merge",
    "merged_volume_approx",
    "merged_intensities",
    "ideal_gas_pressure",
    "merge_report",
]


def merge(a: Network, b: Network) -> Network:
    return Network(nodes=a.nodes + b.nodes, links=a.links + b.links)


def _check_volumes(*volumes: float) -> None:
    for v in volumes:
        if not v > 0:
            raise ValidationError(f"volumes must be > 0, got {v}")


def _check_pressures(*pressures: float) -> None:
    for p in pressures:
        if p < 0:
            raise ValidationError(f"pressures must be >= 0, got {p}")


def merged_volume_approx(v1: float, v2: float) -> float:
    """Large-net merged volume ``(sqrt(V1) + sqrt(V2))**2``."""
    _check_volumes(v1, v2)
    return (math.sqrt(v1) + math.sqrt(v2)) ** 2


def merged_intensities(v1: float, p1: float, v2: float, p2: float) -> float:
    """Common temperature/pressure/occupation after merging two large nets.

    Total links ``P1 V1 + P2 V2`` spread over the approximate merged volume.
    """
    _check_volumes(v1, v2)
    _check_pressures(p1, p2)
    return (p1 * v1 + p2 * v2) / merged_volume_approx(v1, v2)


def ideal_gas_pressure(v1: float, p1: float, v2: float, p2: float) -> float:
    """Pressure after mixing two ideal gases, whose volumes simply add."""
    _check_volumes(v1, v2)
    _check_pressures(p1, p2)
    return (p1 * v1 + p2 * v2) / (v1 + v2)


@dataclass(frozen=True)
class MergeReport:
    left: NetworkReport
    right: NetworkReport
    combined: NetworkReport
    volume_exact: int
    volume_approx: float
    intensity_exact: float
    intensity_approx: float
    entropy_change_planck: float
    entropy_change_exact: float
    ideal_gas_pressure: float

    def to_dict(self) -> dict:
        return asdict(self)


def merge_report(a: Network, b: Network) -> MergeReport:
    c = merge(a, b)
    left, right, combined = report(a), report(b), report(c)
    return MergeReport(
        left=left,
        right=right,
        combined=combined,
        volume_exact=combined.states,
        volume_approx=merged_volume_approx(left.states, right.states),
        intensity_exact=c.links / combined.states,
        intensity_approx=merged_intensities(
            left.states, left.pressure, right.states, right.pressure
        ),
        entropy_change_planck=entropy_planck(c.links, combined.states)
        - entropy_planck(a.links, left.states)
        - entropy_planck(b.links, right.states),
        entropy_change_exact=log_microstates(c.links, combined.states)
        - log_microstates(a.links, left.states)
        - log_microstates(b.links, right.states),
        ideal_gas_pressure=ideal_gas_pressure(
            left.states, left.pressure, right.states, right.pressure
        ),
    )
